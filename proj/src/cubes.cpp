#include "medianlab/cubes.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "medianlab/errors.hpp"

namespace medianlab {

Point Cube::antipode(Point x) const {
  const std::uint64_t mask = dim == 64 ? ~0ULL : ((1ULL << dim) - 1);
  const std::uint64_t want = coordinate(x) ^ mask;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (coords[i] == want) return points[i];
  }
  throw MedianError(ErrorCode::InternalInconsistency, "cube without antipode");
}

std::uint64_t Cube::coordinate(Point x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) {
    throw MedianError(ErrorCode::InvalidInput, "point not in cube");
  }
  return coords[static_cast<std::size_t>(it - points.begin())];
}

std::optional<Point> antipode_in(const MedianAlgebra& m, Point x, const PointSet& a) {
  for (Point c : members(a)) {
    if (a.is_subset_of(m.interval_set(x, c))) return c;
  }
  return std::nullopt;
}

std::optional<Cube> ends(const MedianAlgebra& m, const PointSet& a) {
  if (a.none() || !is_subalgebra(m, a)) {
    throw MedianError(ErrorCode::NotSubalgebra, "set " + to_bitstring(a) + " is not median-closed");
  }
  PointSet e = m.empty_set();
  for_each_member(a, [&](Point x) {
    if (antipode_in(m, x, a)) e.set(x);
  });
  if (e.none()) return std::nullopt;
  auto cube = recognize_cube(m, e);
  if (!cube) {
    throw MedianError(ErrorCode::InternalInconsistency,
                      "Ends(" + to_bitstring(a) + ") is not a cube");
  }
  return cube;
}

std::optional<Cube> recognize_cube(const MedianAlgebra& m, const PointSet& s) {
  const std::size_t size = s.count();
  if (size == 0 || !std::has_single_bit(size)) return std::nullopt;
  const unsigned dim = static_cast<unsigned>(std::countr_zero(size));
  if (dim > 63) return std::nullopt;
  if (!is_subalgebra(m, s)) return std::nullopt;

  const std::vector<Point> pts = members(s);
  const Point base = pts.front();
  std::vector<Point> atoms;
  for (Point a : pts) {
    if (a == base) continue;
    if ((m.interval_set(base, a) & s).count() == 2) atoms.push_back(a);
  }
  if (atoms.size() != dim) return std::nullopt;

  Cube c;
  c.members = s;
  c.dim = dim;
  c.points = pts;
  c.coords.resize(size);
  std::vector<bool> used(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < dim; ++j) {
      if (m.in_interval(atoms[j], base, pts[i])) bits |= 1ULL << j;
    }
    if (used[bits]) return std::nullopt;
    used[bits] = true;
    c.coords[i] = bits;
  }
  // Bijective; now the map must commute with the median (majority on bits).
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      for (std::size_t k = j + 1; k < size; ++k) {
        const std::uint64_t a = c.coords[i], b = c.coords[j], d = c.coords[k];
        const std::uint64_t maj = (a & b) | (a & d) | (b & d);
        if (c.coordinate(m.median(pts[i], pts[j], pts[k])) != maj) return std::nullopt;
      }
  c.hull = convex_hull(m, s).members();
  return c;
}

CubeCheck is_cube(const MedianAlgebra& m, const PointSet& s) {
  auto c = recognize_cube(m, s);
  if (!c) return {};
  return {true, c->dim};
}

std::vector<Cube> enumerate_cubes(const MedianAlgebra& m, bool maximal_only) {
  const std::size_t n = m.size();
  std::vector<std::vector<Cube>> levels;
  levels.emplace_back();
  for (Point x = 0; x < n; ++x) levels[0].push_back(*recognize_cube(m, singleton(n, x)));

  while (!levels.back().empty()) {
    std::vector<Cube> next;
    std::unordered_set<PointSet, PointSetHash> seen;
    for (const Cube& c : levels.back()) {
      for (Point p = 0; p < n; ++p) {
        if (c.members.test(p)) continue;
        for (Point q = (c.dim == 0 ? p : 0); q < n; ++q) {
          if (c.members.test(q)) continue;
          PointSet d = c.members;
          bool disjoint = true;
          for (Point x : c.points) {
            const Point y = m.median(x, p, q);
            if (c.members.test(y)) {
              disjoint = false;
              break;
            }
            d.set(y);
          }
          if (!disjoint || d.count() != 2 * c.points.size()) continue;
          if (!seen.insert(d).second) continue;
          if (auto cube = recognize_cube(m, d)) next.push_back(std::move(*cube));
        }
      }
    }
    levels.push_back(std::move(next));
  }

  std::vector<Cube> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (Cube& c : levels[k]) {
      if (maximal_only && k + 1 < levels.size()) {
        bool contained = false;
        for (std::size_t j = k + 1; j < levels.size() && !contained; ++j) {
          for (const Cube& big : levels[j]) {
            if (c.members.is_subset_of(big.members)) {
              contained = true;
              break;
            }
          }
        }
        if (contained) continue;
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const Cube& a, const Cube& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return member_less(a.members, b.members);
  });
  return out;
}

}  // namespace medianlab
