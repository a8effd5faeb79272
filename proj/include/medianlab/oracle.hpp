#pragma once

// Brute-force reference implementations. Nothing here calls the optimized
// wall, cube or hull code; the point is to disagree with it loudly.

#include <cstdint>
#include <string>
#include <vector>

#include "medianlab/action.hpp"
#include "medianlab/algebra.hpp"

namespace medianlab::oracle {

struct CorpusEntry {
  std::string label;
  MedianAlgebra algebra;
  std::uint64_t mask = 0;  // bit v set iff vertex v of {0,1}^k is a point
};

struct Corpus {
  unsigned dim = 0;
  std::vector<CorpusEntry> entries;
};

/// Nonempty majority-closed subsets of {0,1}^k, one per orbit of the
/// hyperoctahedral group, ordered by size then canonical mask. Point i of an
/// entry is the i-th smallest vertex. Throws TooLarge for k > 4.
Corpus enumerate_hypercube_subalgebras(unsigned k);

/// Subsets S containing 0 with S and its complement both nonempty and convex,
/// found by scanning every subset.
std::vector<PointSet> brute_walls(const MedianAlgebra& m);

/// Median-closed subsets isomorphic to {0,1}^k, found by scanning subsets of
/// size 2^k and searching for an isomorphism by backtracking.
std::vector<PointSet> brute_cubes(const MedianAlgebra& m);

/// Least fixpoint of S -> S u U{[x,y] : x, y in S}.
PointSet brute_hull(const MedianAlgebra& m, const PointSet& s);

/// Scans C for the point lying on every [x, c]; -1 if there is none or more
/// than one.
long brute_gate(const MedianAlgebra& m, Point x, const PointSet& c);

/// Sets S whose uniform measure is fixed by the self-median operator, by
/// integer triple counting: fixed iff every z in S is the median of exactly
/// |S|^2 ordered triples from S.
std::vector<PointSet> brute_uniform_fixed(const MedianAlgebra& m);

/// Explicit isomorphism from S onto {0,1}^k (coords[i] for the i-th member),
/// or empty when none exists.
std::vector<std::uint64_t> find_cube_isomorphism(const MedianAlgebra& m, const PointSet& s);

struct RecheckReport {
  std::size_t n = 0;
  std::size_t walls = 0;
  std::size_t cubes = 0;
  std::size_t hulls_checked = 0;
  std::size_t gates_checked = 0;
  std::size_t fixed_measures = 0;
  std::vector<std::string> diffs;  // "component: witness"

  bool ok() const { return diffs.empty(); }
};

/// Diffs walls, cubes, hulls, gates and Phi-fixed uniform measures against
/// the optimized modules. Hulls are rechecked on every subset for n <= 12 and
/// on all pairs, triples and 512 seeded random subsets above. Throws TooLarge
/// for n > 16.
RecheckReport brute_recheck(const MedianAlgebra& m, std::uint64_t seed = kDefaultSeed);

/// Throws MedianError(Mismatch) naming the first diff.
void require_clean(const RecheckReport& report);

/// Every automorphism, by backtracking with the median constraint.
std::vector<Permutation> automorphisms(const MedianAlgebra& m);

/// Every surjective morphism onto {0,1}^k (point v of the target has
/// coordinate bits v), by backtracking with the median constraint.
std::vector<std::vector<Point>> surjective_cube_morphisms(const MedianAlgebra& m, unsigned k);

}  // namespace medianlab::oracle
