#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "medianlab/algebra.hpp"
#include "medianlab/numeric.hpp"
#include "medianlab/rational.hpp"

namespace medianlab {

/// Step law on the generators {a, A, b, B} x {+1, -1} of F2 x Z/2.
/// Slot 2 * letter + (sign == -1), letters ordered a, A, b, B.
class StepDistribution {
 public:
  static StepDistribution uniform();

  /// Comma separated "key=p/q" entries, key a letter followed by + or -,
  /// e.g. "a+=1/8,a-=1/8,...". Missing keys weigh zero; the weights must sum
  /// to exactly 1.
  static StepDistribution parse(std::string_view spec);

  const std::array<Rational, 8>& exact() const { return exact_; }
  double weight(std::size_t slot) const { return weights_[slot]; }
  double letter_weight(std::size_t letter) const;
  double plus_weight() const;
  std::string describe() const;

 private:
  explicit StepDistribution(std::array<Rational, 8> exact);
  std::array<Rational, 8> exact_;
  std::array<double, 8> weights_{};
};

struct WalkConfig {
  unsigned depth = 4;
  std::size_t steps = 200;
  std::size_t trajectories = 200'000;
  std::uint64_t seed = kDefaultSeed;
  StepDistribution mu = StepDistribution::uniform();
  unsigned max_flip_window = 6;

  /// Throws InvalidInput unless depth >= 1, steps > depth and the flip window
  /// fits inside the walk.
  void validate() const;
};

struct WalkReport {
  std::vector<std::string> cylinders;        // reduced words of length depth
  std::vector<std::uint64_t> prefix_counts;  // aligned with cylinders
  std::uint64_t unresolved = 0;              // still shorter than depth after 100 extensions
  std::array<std::uint64_t, 2> sign_counts{};  // {+1, -1} at the final step
  std::vector<std::uint64_t> constant_sign_counts;  // [k-1]: sign unchanged over last k steps
  std::uint64_t trajectories = 0;

  std::vector<double> prefix_distribution() const;
  double sign_plus_fraction() const;
  std::vector<double> sign_flip_stats() const;
};

struct WalkPrediction {
  std::vector<double> cylinders;   // harmonic measure of each cylinder
  double sign_plus = 0.5;
  std::vector<double> constant_sign;  // [k-1]
};

/// Reduced words of length d in the canonical cylinder order (4 * 3^{d-1}).
std::vector<std::string> cylinder_words(unsigned depth);

/// Independent right random walks on F2 x Z/2. Trajectory t draws from its
/// own generator seeded from (seed, t), so results do not depend on
/// scheduling. A word shorter than depth at the last step is extended in
/// blocks of `steps` further steps, at most 100 times.
WalkReport simulate_walk(const WalkConfig& config);

/// Exact-law predictions: cylinder masses from first-passage probabilities
/// of the nearest-neighbour walk, sign law from the +1 weight.
WalkPrediction predict_walk(const WalkConfig& config);

}  // namespace medianlab
