#include "medianlab/dynamics.hpp"

#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

PointSet saturate(const GroupAction& action, PointSet s) {
  std::vector<Point> queue = members(s);
  while (!queue.empty()) {
    const Point x = queue.back();
    queue.pop_back();
    for (Point y : action.neighbours(x)) {
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

}  // namespace

PointSet orbit(const GroupAction& action, Point x) {
  return saturate(action, singleton(action.algebra().size(), x));
}

PointSet invariant_closure(const GroupAction& action, const PointSet& s) {
  PointSet current = s;
  while (true) {
    PointSet next = median_closure(action.algebra(), saturate(action, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

MinimalityReport is_minimal(const GroupAction& action) {
  const std::size_t n = action.algebra().size();
  MinimalityReport report;
  for (Point x = 0; x < n; ++x) {
    PointSet c = invariant_closure(action, singleton(n, x));
    if (c.all()) continue;
    report.minimal = false;
    if (!report.witness || c.count() < report.witness->count() ||
        (c.count() == report.witness->count() && member_less(c, *report.witness))) {
      report.witness = std::move(c);
    }
  }
  return report;
}

InducedActions induced_cube_action(const GroupAction& action, const Decomposition& dec) {
  if (!is_equivariant_decomposition(action, dec)) {
    throw MedianError(ErrorCode::NotEquivariant, "generators do not preserve W1");
  }
  const std::size_t n = action.algebra().size();
  std::vector<std::string> names;
  std::vector<Permutation> on_prime, on_cube;
  for (std::size_t i = 0; i < action.generator_count(); ++i) {
    const Permutation& g = action.generator(i);
    Permutation p(dec.fiber_points.size()), c(dec.cube.size());
    for (Point j = 0; j < dec.fiber_points.size(); ++j) p[j] = dec.to_prime[g[dec.fiber_points[j]]];
    for (Point corner = 0; corner < dec.cube.size(); ++corner) {
      c[corner] = dec.to_cube[g[dec.iso_inverse(0, corner)]];
    }
    for (Point x = 0; x < n; ++x) {
      if (dec.to_prime[g[x]] != p[dec.to_prime[x]] || dec.to_cube[g[x]] != c[dec.to_cube[x]]) {
        throw MedianError(ErrorCode::NotEquivariant,
                          "generator '" + action.name(i) + "' does not act diagonally at point " +
                              std::to_string(x));
      }
    }
    names.push_back(action.name(i));
    on_prime.push_back(std::move(p));
    on_cube.push_back(std::move(c));
  }
  return {GroupAction::validated(dec.m_prime, names, std::move(on_prime)),
          GroupAction::validated(dec.cube, names, std::move(on_cube))};
}

}  // namespace medianlab
