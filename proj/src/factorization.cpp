#include "medianlab/factorization.hpp"

#include <random>
#include <unordered_set>

#include "medianlab/cubes.hpp"
#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw MedianError(ErrorCode::InternalInconsistency, what);
}

// pi_target restricted to `source` must be a bijection onto `target` that
// commutes with the median.
void check_fiber_iso(const MedianAlgebra& m, const PointSet& source, const ConvexSet& target) {
  const std::vector<Point> pts = members(source);
  std::vector<Point> image(pts.size());
  PointSet hit = m.empty_set();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    image[i] = gate(m, pts[i], target);
    if (hit.test(image[i])) inconsistent("gate projection between fibres is not injective");
    hit.set(image[i]);
  }
  if (hit != target.members()) inconsistent("gate projection between fibres is not onto");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (gate(m, m.median(pts[i], pts[j], pts[k]), target) !=
            m.median(image[i], image[j], image[k])) {
          inconsistent("gate projection between fibres is not a morphism");
        }
      }
}

}  // namespace

WallClassification classify_walls(const std::vector<Wall>& walls) {
  WallClassification out;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    bool all = true;
    for (std::size_t j = 0; j < walls.size() && all; ++j) {
      if (i != j && !is_transverse(walls[i], walls[j])) all = false;
    }
    (all ? out.w1 : out.w2).push_back(walls[i]);
  }
  return out;
}

WallClassification classify_walls(const MedianAlgebra& m) {
  return classify_walls(enumerate_walls(m));
}

Decomposition cubical_factor(const MedianAlgebra& m) {
  const std::size_t n = m.size();
  WallClassification cls = classify_walls(m);
  const unsigned k = static_cast<unsigned>(cls.w1.size());
  if (k > 20) throw MedianError(ErrorCode::TooLarge, "cubical factor dimension above 20");
  const std::size_t corners = std::size_t{1} << k;

  std::vector<Point> to_cube(n, 0);
  for (unsigned j = 0; j < k; ++j) {
    for_each_member(cls.w1[j].canonical_side(), [&](Point x) { to_cube[x] |= Point{1} << j; });
  }
  std::vector<PointSet> fibers(corners, m.empty_set());
  for (Point x = 0; x < n; ++x) fibers[to_cube[x]].set(x);
  for (const PointSet& f : fibers) {
    if (f.none()) inconsistent("W1 is not transverse: empty fibre");
  }

  const PointSet& base = fibers[to_cube[0]];
  if (!is_convex(m, base)) inconsistent("base fibre is not convex");
  const ConvexSet base_set = ConvexSet::checked(m, base);

  // All fibres are pairwise isomorphic through gate projections. With many
  // fibres only the pairs involving the base fibre are checked.
  std::vector<ConvexSet> fiber_sets;
  fiber_sets.reserve(corners);
  for (const PointSet& f : fibers) {
    if (!is_convex(m, f)) inconsistent("fibre " + to_bitstring(f) + " is not convex");
    fiber_sets.push_back(ConvexSet::checked(m, f));
  }
  if (corners * corners <= 4096) {
    for (std::size_t a = 0; a < corners; ++a)
      for (std::size_t b = 0; b < corners; ++b)
        if (a != b) check_fiber_iso(m, fibers[a], fiber_sets[b]);
  } else {
    for (std::size_t a = 0; a < corners; ++a) {
      check_fiber_iso(m, fibers[a], base_set);
      check_fiber_iso(m, base, fiber_sets[a]);
    }
  }

  Decomposition dec{.w1 = std::move(cls.w1),
                    .w2 = std::move(cls.w2),
                    .cube = MedianAlgebra::cube(k),
                    .m_prime = m.restrict_to(base),
                    .fiber = base,
                    .fiber_points = members(base),
                    .to_prime = std::vector<Point>(n),
                    .to_cube = std::move(to_cube),
                    .from_product = std::vector<Point>(n)};
  std::vector<Point> prime_index(n, 0);
  for (Point i = 0; i < dec.fiber_points.size(); ++i) prime_index[dec.fiber_points[i]] = i;

  if (dec.fiber_points.size() * corners != n) inconsistent("carrier size is not |M'| * 2^|W1|");
  std::vector<bool> hit(n, false);
  for (Point x = 0; x < n; ++x) {
    dec.to_prime[x] = prime_index[gate(m, x, base_set)];
    const std::size_t slot = (static_cast<std::size_t>(dec.to_prime[x]) << k) + dec.to_cube[x];
    if (hit[slot]) inconsistent("iota x pi_0 is not injective");
    hit[slot] = true;
    dec.from_product[slot] = x;
  }

  auto iso_ok = [&](Point x, Point y, Point z) {
    const Point v = m.median(x, y, z);
    const Point a = dec.to_cube[x], b = dec.to_cube[y], c = dec.to_cube[z];
    return dec.to_cube[v] == ((a & b) | (a & c) | (b & c)) &&
           dec.to_prime[v] ==
               dec.m_prime.median(dec.to_prime[x], dec.to_prime[y], dec.to_prime[z]);
  };
  if (n <= MedianAlgebra::kMaxTablePoints) {
    for (Point x = 0; x < n; ++x)
      for (Point y = x; y < n; ++y)
        for (Point z = y; z < n; ++z)
          if (!iso_ok(x, y, z)) inconsistent("iota x pi_0 is not a median morphism");
  } else {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<Point> pick(0, static_cast<Point>(n - 1));
    for (int i = 0; i < 1'000'000; ++i) {
      if (!iso_ok(pick(rng), pick(rng), pick(rng))) {
        inconsistent("iota x pi_0 is not a median morphism");
      }
    }
  }
  return dec;
}

Morphism factor_through_cube(const Decomposition& dec, const Morphism& phi) {
  const MedianAlgebra& target = phi.target();
  if (!recognize_cube(target, target.universe())) {
    throw MedianError(ErrorCode::NotCube, "morphism target is not a cube");
  }
  if (!phi.is_surjective()) {
    throw MedianError(ErrorCode::InvalidInput, "morphism onto the cube is not surjective");
  }
  if (phi.source().size() != dec.to_cube.size()) {
    throw MedianError(ErrorCode::InvalidInput, "decomposition belongs to another algebra");
  }
  const std::size_t corners = dec.cube.size();
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> psi(corners, kUnset);
  std::vector<Point> witness(corners, 0);
  for (Point x = 0; x < phi.source().size(); ++x) {
    Point& slot = psi[dec.to_cube[x]];
    if (slot == kUnset) {
      slot = phi(x);
      witness[dec.to_cube[x]] = x;
    } else if (slot != phi(x)) {
      throw MedianError(ErrorCode::NotFactorizable,
                        "points " + std::to_string(witness[dec.to_cube[x]]) + " and " +
                            std::to_string(x) +
                            " share a cubical-factor coordinate but phi separates them");
    }
  }
  // Every corner has a preimage, so psi is forced everywhere: unique.
  for (Point v : psi) {
    if (v == kUnset) inconsistent("projection onto the cubical factor is not surjective");
  }
  if (morphism_violation(dec.cube, target, psi)) {
    throw MedianError(ErrorCode::NotFactorizable, "induced map on the cube is not a morphism");
  }
  return Morphism::checked(dec.cube, target, std::move(psi));
}

Morphism factor_through_cube(const MedianAlgebra& m, const Morphism& phi) {
  return factor_through_cube(cubical_factor(m), phi);
}

bool is_equivariant_decomposition(const GroupAction& action, const Decomposition& dec) {
  std::unordered_set<PointSet, PointSetHash> w1;
  for (const Wall& w : dec.w1) w1.insert(w.canonical_side());
  for (const Permutation& g : action.generators()) {
    for (const Wall& w : dec.w1) {
      if (!w1.contains(Wall(apply(g, w.canonical_side())).canonical_side())) return false;
    }
  }
  return true;
}

}  // namespace medianlab
