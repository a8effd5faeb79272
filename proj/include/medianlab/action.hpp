#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medianlab/algebra.hpp"

namespace medianlab {

using Permutation = std::vector<Point>;

/// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t n);

/// A group acting on a finite median algebra by automorphisms, given by named
/// generator permutations. No abstract group object is kept; elements are
/// words in the generators.
class GroupAction {
 public:
  /// Throws InvalidInput for malformed permutations and NotAutomorphism (with
  /// a witness triple) when a generator does not commute with the median.
  static GroupAction validated(MedianAlgebra algebra, std::vector<std::string> names,
                               std::vector<Permutation> generators);

  static GroupAction trivial(MedianAlgebra algebra);

  const MedianAlgebra& algebra() const { return algebra_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const Permutation& generator(std::size_t i) const { return generators_[i]; }
  const Permutation& generator_inverse(std::size_t i) const { return inverses_[i]; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Evaluates a word such as "a b^-1" or "a*b'" (left factor acts last);
  /// "e", "id" or an empty word is the identity.
  Permutation evaluate(std::string_view word) const;

  /// Point images of x under every generator and inverse.
  std::vector<Point> neighbours(Point x) const;

 private:
  GroupAction(MedianAlgebra a, std::vector<std::string> names,
              std::vector<Permutation> gens);

  MedianAlgebra algebra_;
  std::vector<std::string> names_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> inverses_;
};

/// Closure of `seeds` under composition. Throws TooLarge beyond `limit`
/// elements. For finite permutation groups this is the generated group.
std::vector<Permutation> generated_semigroup(const std::vector<Permutation>& seeds,
                                             std::size_t limit = 1'000'000);

/// Image of a set under a permutation.
PointSet apply(const Permutation& p, const PointSet& s);

}  // namespace medianlab
