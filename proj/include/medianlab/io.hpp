#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "medianlab/action.hpp"
#include "medianlab/algebra.hpp"
#include "medianlab/measures.hpp"

namespace medianlab::io {

using Json = nlohmann::ordered_json;

/// {"n": n, "median": [n^3 ints]} or {"embedding": ["0110", ...]}, exactly one.
MedianAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const MedianAlgebra& m);

struct ActionFile {
  GroupAction action;
  std::optional<GroupMeasure> mu;
};

/// {"generators": {"name": [perm]}, "mu": {"word": "p/q"}}; "mu" optional.
ActionFile action_from_json(const MedianAlgebra& m, const Json& j);
Json action_to_json(const GroupAction& action, const GroupMeasure* mu);

Json measure_to_json(const Measure& eta);

/// Errors are rethrown as MedianError prefixed with the path.
Json read_json(const std::string& path);
MedianAlgebra read_algebra(const std::string& path);
ActionFile read_action(const MedianAlgebra& m, const std::string& path);

}  // namespace medianlab::io
