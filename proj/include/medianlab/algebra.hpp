#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "medianlab/point_set.hpp"

namespace medianlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0001ULL;

struct AxiomFailure {
  int axiom = 0;                // 1 symmetry, 2 absorption, 3 associativity
  std::vector<Point> witness;   // 3 points for axioms 1/2, 5 for axiom 3
};

struct ValidationReport {
  std::size_t n = 0;
  bool sampled = false;  // axiom 3 was sample-checked instead of exhaustive
  std::vector<AxiomFailure> failures;  // first violation per failing axiom

  bool ok() const { return failures.empty(); }
  std::string describe() const;
};

/// Checks the three median axioms on a flat row-major n^3 table. Exhaustive
/// for n <= MedianAlgebra::kMaxTablePoints, otherwise axiom 3 is checked on
/// `samples` random 5-tuples.
ValidationReport check_axioms(std::size_t n, std::span<const Point> table,
                              std::size_t samples = 1'000'000,
                              std::uint64_t seed = kDefaultSeed);

/// A finite median algebra on points 0..n-1.
///
/// Either a full ternary table is stored (n <= 64) or the median is the
/// coordinatewise majority of a hypercube embedding, looked up on demand.
/// Instances are immutable and cheap to copy (shared state).
class MedianAlgebra {
 public:
  static constexpr std::size_t kMaxTablePoints = 64;
  static constexpr std::size_t kMaxIntervalCache = 256;

  /// Validates the axioms; throws MedianError(AxiomViolation) with the
  /// report text on failure and TooLarge for n > kMaxTablePoints.
  static MedianAlgebra from_table(std::size_t n, std::vector<Point> table);

  /// Builds the subalgebra of {0,1}^k spanned by the given distinct
  /// coordinate vectors; the set must be closed under majority (checked
  /// exhaustively up to kMaxTablePoints, sampled above).
  static MedianAlgebra from_embedding(std::vector<PointSet> coords);

  /// The full cube {0,1}^k, point i having coordinate bits of i.
  static MedianAlgebra cube(unsigned dim);

  /// Product algebra; point (a, b) gets index a * right.size() + b.
  static MedianAlgebra product(const MedianAlgebra& left,
                               const MedianAlgebra& right);

  std::size_t size() const;
  Point median(Point x, Point y, Point z) const;

  bool in_interval(Point z, Point x, Point y) const;
  PointSet interval_set(Point x, Point y) const;

  bool has_table() const;
  bool has_embedding() const;
  std::size_t embedding_dim() const;
  const PointSet& coordinates(Point x) const;
  std::optional<Point> find_coordinates(const PointSet& coords) const;

  /// Row-major n^3 table; materialized on demand when not stored.
  std::vector<Point> table() const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet universe() const { return full_set(size()); }

  /// Sub-algebra on a median-closed subset, re-indexed by ascending original
  /// index. `index_map`, when given, receives new index -> original point.
  MedianAlgebra restrict_to(const PointSet& subset,
                            std::vector<Point>* index_map = nullptr) const;

  /// Same algebra with points renamed: new point perm[x] plays the role of x.
  MedianAlgebra relabel(const std::vector<Point>& perm) const;

  bool operator==(const MedianAlgebra& other) const;

 private:
  struct Data;
  explicit MedianAlgebra(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> d_;
};

/// A convex subset, optionally remembering the points it was generated from.
class ConvexSet {
 public:
  /// Throws MedianError(NotConvex) if `members` is not closed under intervals.
  static ConvexSet checked(const MedianAlgebra& m, PointSet members);

  const PointSet& members() const { return members_; }
  const std::vector<Point>& generators() const { return generators_; }
  bool contains(Point p) const { return members_.test(p); }
  std::size_t size() const { return members_.count(); }

 private:
  ConvexSet(PointSet members, std::vector<Point> generators)
      : members_(std::move(members)), generators_(std::move(generators)) {}

  friend ConvexSet interval(const MedianAlgebra&, Point, Point);
  friend ConvexSet convex_hull(const MedianAlgebra&, const PointSet&);

  PointSet members_;
  std::vector<Point> generators_;
};

Point median(const MedianAlgebra& m, Point x, Point y, Point z);

/// [x, y] = { z : m(x, y, z) = z }.
ConvexSet interval(const MedianAlgebra& m, Point x, Point y);

/// Union of all intervals [a, b] with a in A, b in B.
PointSet join(const MedianAlgebra& m, const PointSet& a, const PointSet& b);

/// Least convex superset, built by joining the hull so far with each further
/// point in ascending order.
ConvexSet convex_hull(const MedianAlgebra& m, const PointSet& s);

/// Gate of x in the convex set C: the point of C on every interval [x, c].
Point gate(const MedianAlgebra& m, Point x, const ConvexSet& c);
/// Same, validating convexity of a raw set first (throws NotConvex).
Point gate(const MedianAlgebra& m, Point x, const PointSet& c);

/// The gate projection as a full point table.
std::vector<Point> gate_projection(const MedianAlgebra& m, const ConvexSet& c);

bool is_convex(const MedianAlgebra& m, const PointSet& s);
bool is_subalgebra(const MedianAlgebra& m, const PointSet& s);

/// Smallest median-closed superset.
PointSet median_closure(const MedianAlgebra& m, const PointSet& s);

struct SubsetFlags {
  bool convex = false;
  bool subalgebra = false;
  bool gate_convex = false;
};

SubsetFlags classify_subset(const MedianAlgebra& m, const PointSet& s);

/// A map between median algebras commuting with the median.
class Morphism {
 public:
  /// Throws MedianError(NotMorphism) with a witness triple on failure.
  /// Exhaustive on all triples for n <= 64, sampled above.
  static Morphism checked(MedianAlgebra source, MedianAlgebra target,
                          std::vector<Point> map);

  const MedianAlgebra& source() const { return source_; }
  const MedianAlgebra& target() const { return target_; }
  const std::vector<Point>& map() const { return map_; }
  Point operator()(Point x) const { return map_[x]; }

  bool is_surjective() const;
  bool is_injective() const;

 private:
  Morphism(MedianAlgebra s, MedianAlgebra t, std::vector<Point> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  MedianAlgebra source_;
  MedianAlgebra target_;
  std::vector<Point> map_;
};

/// Returns a witness triple (x, y, z) where the map fails to commute with the
/// median, or nullopt.
std::optional<std::array<Point, 3>> morphism_violation(
    const MedianAlgebra& source, const MedianAlgebra& target,
    std::span<const Point> map, std::uint64_t seed = kDefaultSeed);

}  // namespace medianlab
