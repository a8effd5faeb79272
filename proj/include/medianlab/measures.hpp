#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medianlab/action.hpp"
#include "medianlab/algebra.hpp"
#include "medianlab/cubes.hpp"
#include "medianlab/numeric.hpp"
#include "medianlab/rational.hpp"
#include "medianlab/walls.hpp"

namespace medianlab {

/// Exact probability vector over the carrier.
class Measure {
 public:
  /// Throws InvalidInput unless all weights are >= 0 and sum to exactly 1.
  static Measure checked(std::vector<Rational> weights);
  static Measure dirac(std::size_t n, Point x);
  static Measure uniform_on(const PointSet& support);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](Point x) const { return weights_[x]; }
  const std::vector<Rational>& weights() const { return weights_; }
  PointSet support() const;
  Rational mass(const PointSet& s) const;
  std::vector<double> to_double() const;

  /// (p_* eta)(y) = eta(p^{-1} y).
  Measure pushforward(std::span<const Point> map, std::size_t target_size) const;

  bool operator==(const Measure&) const = default;

 private:
  explicit Measure(std::vector<Rational> w) : weights_(std::move(w)) {}
  std::vector<Rational> weights_;
};

/// Self-median operator: Phi(eta)(z) = sum of eta(x) eta(y) eta(w) over
/// ordered triples with m(x, y, w) = z.
Measure phi(const MedianAlgebra& m, const Measure& eta);
std::vector<double> phi(const MedianAlgebra& m, std::span<const double> eta);

bool is_balanced(const MedianAlgebra& m, const Measure& eta);

/// Uniform measure on a subcube. Throws NotCube for other sets.
Measure cubical_measure(const MedianAlgebra& m, const PointSet& cube_members);
Measure cubical_measure(const Cube& cube);

struct FixedPointRun {
  Measure start;
  std::vector<double> terminal;
  std::size_t nearest_cube = 0;   // index into FixedPointSearch::cubes
  double distance = 0;            // TV to that cubical measure
  double last_step = 0;           // TV between the final two iterates
  bool within_tol = false;        // distance < tol
};

struct FixedPointSearch {
  std::vector<Cube> cubes;
  std::vector<bool> cube_is_fixed;  // exact Phi check of each cubical measure
  std::vector<FixedPointRun> runs;

  std::size_t within_tol_count() const;
};

/// Random start i takes integer weights in [1, 1000] from a generator seeded
/// by (seed, i), normalized exactly. Iteration runs in double precision:
/// exact iterates have denominators growing like 3^k. Each iterate is
/// rescaled to total mass 1.
FixedPointSearch find_phi_fixed_points(const MedianAlgebra& m, std::size_t starts,
                                       std::size_t iters, double tol,
                                       std::uint64_t seed = kDefaultSeed);

Measure random_measure(std::size_t n, std::uint64_t seed);

struct MassEntry {
  std::vector<std::size_t> walls;  // indices into the wall list, canonical sides
  Rational mass;
};

/// Mass of every intersection of at most max_family canonical sides. The
/// measure must be balanced (InvalidInput otherwise); every mass must be 0 or
/// 2^{-s} with s at most the family size (SpectrumViolation otherwise).
std::vector<MassEntry> halfspace_mass(const MedianAlgebra& m, const Measure& eta,
                                      const std::vector<Wall>& walls,
                                      std::size_t max_family = 3);

/// Probability measure on words in the generators of an action.
class GroupMeasure {
 public:
  /// Throws InvalidInput for unknown words, negative weights or a total
  /// different from 1.
  static GroupMeasure from_words(const GroupAction& action,
                                 const std::vector<std::pair<std::string, Rational>>& entries);
  static GroupMeasure uniform_on_group(const GroupAction& action);

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  /// mu_-(A) = mu(A^{-1}).
  GroupMeasure inverted() const;

 private:
  GroupMeasure() = default;
  std::vector<std::string> words_;
  std::vector<Rational> weights_;
  std::vector<Permutation> elements_;
};

/// The semigroup generated by the support contains every generator.
bool is_generating(const GroupAction& action, const GroupMeasure& mu);

/// (mu * nu)(A) = sum_g mu(g) nu(g^{-1} A).
Measure convolve(const GroupMeasure& mu, const Measure& nu);

/// P(x -> y) = sum { mu(g) : g x = y }.
std::vector<std::vector<Rational>> transition_matrix(std::size_t n, const GroupMeasure& mu);

/// Vertices of { nu : mu * nu = nu } within the simplex. Each vertex is the
/// unique stationary law of one closed communicating class of the transition
/// matrix; their number is cross-checked against the rational nullity of
/// P^T - I and each vertex is re-substituted. Throws NotGenerating.
std::vector<Measure> stationary_polytope(const GroupAction& action, const GroupMeasure& mu);

/// Coefficients expressing nu as a convex combination of vertices with
/// disjoint supports, or nullopt if nu is not in their hull.
std::optional<std::vector<Rational>> hull_coefficients(const std::vector<Measure>& vertices,
                                                       const Measure& nu);

/// Rank of a rational matrix (Gaussian elimination).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace medianlab
