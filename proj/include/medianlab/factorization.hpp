#pragma once

#include <vector>

#include "medianlab/action.hpp"
#include "medianlab/algebra.hpp"
#include "medianlab/walls.hpp"

namespace medianlab {

/// W1: walls transverse to every other wall. W2: the rest.
struct WallClassification {
  std::vector<Wall> w1;
  std::vector<Wall> w2;
};

WallClassification classify_walls(const std::vector<Wall>& walls);
WallClassification classify_walls(const MedianAlgebra& m);

/// M ~ M' x C with C = {0,1}^|W1|.
///
/// Cube coordinates follow the wall list: bit j of to_cube[x] is set iff x is
/// on the canonical side of w1[j]. M' is the fibre over to_cube[0], re-indexed
/// by ascending original index; to_prime[x] is the index of the gate of x in
/// that fibre.
struct Decomposition {
  std::vector<Wall> w1;
  std::vector<Wall> w2;
  MedianAlgebra cube;
  MedianAlgebra m_prime;
  PointSet fiber;
  std::vector<Point> fiber_points;
  std::vector<Point> to_prime;
  std::vector<Point> to_cube;
  std::vector<Point> from_product;  // index prime * 2^dim + cube

  unsigned dim() const { return static_cast<unsigned>(w1.size()); }
  Point iso_inverse(Point prime, Point cube_point) const {
    return from_product[(static_cast<std::size_t>(prime) << dim()) + cube_point];
  }
};

/// Throws InternalInconsistency if any fibre check or the isomorphism check
/// fails; neither can happen for a median algebra.
Decomposition cubical_factor(const MedianAlgebra& m);

/// The unique psi: C -> C' with phi = psi o (projection to C). phi must be
/// surjective onto an algebra that is itself a cube (NotCube / InvalidInput
/// otherwise). Throws NotFactorizable with a witness when phi is not constant
/// on some fibre of the projection.
Morphism factor_through_cube(const Decomposition& dec, const Morphism& phi);
Morphism factor_through_cube(const MedianAlgebra& m, const Morphism& phi);

/// Generators map W1 onto itself.
bool is_equivariant_decomposition(const GroupAction& action, const Decomposition& dec);

}  // namespace medianlab
