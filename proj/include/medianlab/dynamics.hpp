#pragma once

#include <optional>

#include "medianlab/action.hpp"
#include "medianlab/factorization.hpp"

namespace medianlab {

/// Smallest subalgebra containing s and invariant under the action.
PointSet invariant_closure(const GroupAction& action, const PointSet& s);

/// Orbit of a point under the generated group.
PointSet orbit(const GroupAction& action, Point x);

struct MinimalityReport {
  bool minimal = true;
  std::optional<PointSet> witness;  // smallest proper invariant subalgebra found
};

/// Any nonempty invariant subalgebra contains the invariant closure of one of
/// its points, so scanning singleton closures decides minimality.
MinimalityReport is_minimal(const GroupAction& action);

struct InducedActions {
  GroupAction on_prime;
  GroupAction on_cube;
};

/// Splits the action across M ~ M' x C. Throws NotEquivariant when W1 is not
/// preserved.
InducedActions induced_cube_action(const GroupAction& action, const Decomposition& dec);

}  // namespace medianlab
