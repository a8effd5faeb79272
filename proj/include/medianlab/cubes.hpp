#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "medianlab/algebra.hpp"

namespace medianlab {

/// A median subalgebra isomorphic to {0,1}^dim.
struct Cube {
  PointSet members;
  unsigned dim = 0;
  std::vector<Point> points;          // members, ascending
  std::vector<std::uint64_t> coords;  // iso witness, coords[i] for points[i]
  PointSet hull;                      // convex hull of members

  /// Antipode inside the cube (complemented coordinates).
  Point antipode(Point x) const;
  std::uint64_t coordinate(Point x) const;
  bool operator==(const Cube& o) const { return members == o.members; }
};

/// The unique x* in A with m(x, x*, z) = z for all z in A, if any.
std::optional<Point> antipode_in(const MedianAlgebra& m, Point x, const PointSet& a);

/// Points of the subalgebra A that have antipodes in A. Throws NotSubalgebra;
/// nullopt when no point has an antipode.
std::optional<Cube> ends(const MedianAlgebra& m, const PointSet& a);

/// Builds the iso witness: with base b = min(S), the atoms are the points a
/// with [b, a] cut down to S equal to {b, a}; coordinate i of z says whether
/// atom i lies in [b, z]. S is a cube iff this map is a bijective morphism
/// onto {0,1}^k.
std::optional<Cube> recognize_cube(const MedianAlgebra& m, const PointSet& s);

struct CubeCheck {
  bool is_cube = false;
  std::optional<unsigned> dim;
};

CubeCheck is_cube(const MedianAlgebra& m, const PointSet& s);

/// All subcubes (or only those not properly inside another), sorted by
/// dimension then members. Cubes of dimension j + 1 are grown from cubes of
/// dimension j: for C and points p, q outside it, C together with
/// { m(c, p, q) : c in C } is tested as a candidate.
std::vector<Cube> enumerate_cubes(const MedianAlgebra& m, bool maximal_only = false);

}  // namespace medianlab
