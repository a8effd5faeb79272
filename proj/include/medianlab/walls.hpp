#pragma once

#include <vector>

#include "medianlab/algebra.hpp"

namespace medianlab {

/// A convex set whose complement is also convex (both nonempty).
struct HalfSpace {
  PointSet side;

  PointSet complement() const { return ~side; }
  bool contains(Point p) const { return side.test(p); }
  bool operator==(const HalfSpace&) const = default;
};

/// Unordered pair of complementary half-spaces, stored as the side holding
/// point 0.
class Wall {
 public:
  /// Canonicalizes: either side may be passed.
  explicit Wall(const PointSet& either_side);

  const PointSet& canonical_side() const { return side_; }
  PointSet other_side() const { return ~side_; }
  HalfSpace canonical() const { return {side_}; }
  HalfSpace opposite() const { return {~side_}; }

  /// True iff the wall puts the two points on different sides.
  bool separates(Point x, Point y) const { return side_.test(x) != side_.test(y); }

  bool operator==(const Wall&) const = default;

 private:
  PointSet side_;
};

/// Deterministic order used for every wall list returned by the library.
bool wall_less(const Wall& a, const Wall& b);

/// All walls of m, sorted. Each wall separates some pair [x, y] = {x, y};
/// candidates are generated from those pairs and from embedding coordinates
/// and verified before being returned.
std::vector<Wall> enumerate_walls(const MedianAlgebra& m);

/// Half-spaces h with A inside h and B disjoint from h, sorted.
std::vector<HalfSpace> delta(const MedianAlgebra& m, const PointSet& a,
                             const PointSet& b);
std::vector<HalfSpace> delta(const MedianAlgebra& m, const std::vector<Wall>& walls,
                             const PointSet& a, const PointSet& b);

/// A point a of the convex set A with delta(A, B) == delta({a}, B). Throws
/// NoWitness if none exists (impossible in a median algebra).
Point gate_separator_point(const MedianAlgebra& m, const ConvexSet& a,
                           const PointSet& b);

/// All four side intersections nonempty.
bool is_transverse(const Wall& w1, const Wall& w2);

struct WallEmbedding {
  std::vector<PointSet> coords;  // coords[x][i] = x lies on the canonical side of W[i]
  bool separating = false;       // injective
  bool transverse = false;       // surjective onto {0,1}^|W|
};

WallEmbedding wall_embedding(const MedianAlgebra& m, const std::vector<Wall>& walls);

/// Walls whose both sides meet A.
std::vector<Wall> halfspaces_cutting(const MedianAlgebra& m, const PointSet& a);
std::vector<Wall> halfspaces_cutting(const std::vector<Wall>& walls, const PointSet& a);

/// adjacency[i][j] = is_transverse(walls[i], walls[j]).
std::vector<std::vector<bool>> transversality_matrix(const std::vector<Wall>& walls);

}  // namespace medianlab
