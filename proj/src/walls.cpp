#include "medianlab/walls.hpp"

#include <algorithm>
#include <unordered_set>

#include "medianlab/errors.hpp"

namespace medianlab {

Wall::Wall(const PointSet& either_side)
    : side_(either_side.test(0) ? either_side : ~either_side) {}

bool wall_less(const Wall& a, const Wall& b) {
  return member_less(a.canonical_side(), b.canonical_side());
}

namespace {

bool adjacent(const MedianAlgebra& m, Point x, Point y) {
  if (m.size() <= MedianAlgebra::kMaxIntervalCache) return m.interval_set(x, y).count() == 2;
  for (Point z = 0; z < m.size(); ++z) {
    if (z != x && z != y && m.in_interval(z, x, y)) return false;
  }
  return true;
}

bool is_halfspace(const MedianAlgebra& m, const PointSet& side) {
  return side.any() && !side.all() && is_convex(m, side) && is_convex(m, ~side);
}

}  // namespace

std::vector<Wall> enumerate_walls(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<Wall> walls;
  auto offer = [&](const PointSet& side) {
    Wall w(side);
    if (seen.contains(w.canonical_side())) return;
    if (!is_halfspace(m, w.canonical_side())) return;
    seen.insert(w.canonical_side());
    walls.push_back(std::move(w));
  };

  if (m.has_embedding()) {
    for (std::size_t i = 0; i < m.embedding_dim(); ++i) {
      PointSet side(n);
      for (Point x = 0; x < n; ++x) side[x] = !m.coordinates(x).test(i);
      if (side.any() && !side.all()) offer(side);
    }
  }
  // A wall separating the adjacent pair x, y is unique and equals the fibre
  // of x under the gate projection onto {x, y}.
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      if (!adjacent(m, x, y)) continue;
      PointSet side(n);
      for (Point z = 0; z < n; ++z) side[z] = m.median(x, y, z) == x;
      offer(side);
    }
  }
  std::sort(walls.begin(), walls.end(), wall_less);
  return walls;
}

std::vector<HalfSpace> delta(const MedianAlgebra& m, const std::vector<Wall>& walls,
                             const PointSet& a, const PointSet& b) {
  (void)m;
  std::vector<HalfSpace> out;
  for (const Wall& w : walls) {
    for (HalfSpace h : {w.canonical(), w.opposite()}) {
      if (a.is_subset_of(h.side) && !b.intersects(h.side)) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const HalfSpace& x, const HalfSpace& y) {
    return member_less(x.side, y.side);
  });
  return out;
}

std::vector<HalfSpace> delta(const MedianAlgebra& m, const PointSet& a,
                             const PointSet& b) {
  return delta(m, enumerate_walls(m), a, b);
}

Point gate_separator_point(const MedianAlgebra& m, const ConvexSet& a,
                           const PointSet& b) {
  if (a.members().none() || b.none()) {
    throw MedianError(ErrorCode::InvalidInput, "separator point needs nonempty sets");
  }
  const std::vector<Wall> walls = enumerate_walls(m);
  const auto target = delta(m, walls, a.members(), b);
  auto works = [&](Point p) {
    return delta(m, walls, singleton(m.size(), p), b) == target;
  };

  // Half-spaces missing B also miss its hull, so work against conv(B).
  const ConvexSet hull_b = convex_hull(m, b);
  const PointSet shared = a.members() & hull_b.members();
  Point candidate;
  if (shared.any()) {
    candidate = static_cast<Point>(shared.find_first());
  } else {
    // Alternating gate projections settle on a gate pair (a, b).
    const Point b0 = static_cast<Point>(hull_b.members().find_first());
    const Point a1 = gate(m, b0, a);
    const Point b1 = gate(m, a1, hull_b);
    candidate = gate(m, b1, a);
  }
  if (works(candidate)) return candidate;
  for (Point p : members(a.members())) {
    if (works(p)) return p;
  }
  throw MedianError(ErrorCode::NoWitness,
                    "no separator point for A=" + to_bitstring(a.members()) +
                        " B=" + to_bitstring(b));
}

bool is_transverse(const Wall& w1, const Wall& w2) {
  const PointSet& s1 = w1.canonical_side();
  const PointSet& s2 = w2.canonical_side();
  const PointSet t1 = ~s1;
  const PointSet t2 = ~s2;
  return s1.intersects(s2) && s1.intersects(t2) && t1.intersects(s2) &&
         t1.intersects(t2);
}

WallEmbedding wall_embedding(const MedianAlgebra& m, const std::vector<Wall>& walls) {
  WallEmbedding e;
  const std::size_t n = m.size();
  e.coords.assign(n, PointSet(walls.size()));
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for_each_member(walls[i].canonical_side(), [&](Point x) { e.coords[x].set(i); });
  }
  std::unordered_set<PointSet, PointSetHash> image(e.coords.begin(), e.coords.end());
  e.separating = image.size() == n;
  e.transverse = walls.size() < 63 && image.size() == (std::size_t{1} << walls.size());
  return e;
}

std::vector<Wall> halfspaces_cutting(const std::vector<Wall>& walls, const PointSet& a) {
  std::vector<Wall> out;
  for (const Wall& w : walls) {
    if (a.intersects(w.canonical_side()) && !a.is_subset_of(w.canonical_side())) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Wall> halfspaces_cutting(const MedianAlgebra& m, const PointSet& a) {
  return halfspaces_cutting(enumerate_walls(m), a);
}

std::vector<std::vector<bool>> transversality_matrix(const std::vector<Wall>& walls) {
  std::vector<std::vector<bool>> adj(walls.size(), std::vector<bool>(walls.size(), false));
  for (std::size_t i = 0; i < walls.size(); ++i) {
    for (std::size_t j = i + 1; j < walls.size(); ++j) {
      adj[i][j] = adj[j][i] = is_transverse(walls[i], walls[j]);
    }
  }
  return adj;
}

}  // namespace medianlab
