#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "medianlab/algebra.hpp"

namespace medianlab::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string action_path;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "table";  // table | json
  int precision = 6;             // digits for float statistics
  std::string out;               // empty: caller prints the report

  bool maximal = false;
  std::size_t starts = 200;
  std::size_t iters = 300;
  double tol = 1e-6;
  unsigned depth = 4;
  std::size_t steps = 200;
  std::size_t trajectories = 200'000;
  std::string mu;  // step law for simulate, "a+=1/8,..."
  unsigned dim = 3;
};

struct DispatchResult {
  int exit_code = 0;   // 0 ok, 1 invalid input, 2 internal inconsistency
  std::string output;  // the report (written to config.out when set)
  std::string error;
};

std::vector<std::string> command_names();

/// Never throws; every failure becomes an exit code and a message.
DispatchResult dispatch(const RunConfig& config);

}  // namespace medianlab::cli
