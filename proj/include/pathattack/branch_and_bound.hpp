#pragma once

#include <cstdint>
#include <vector>

#include "pathattack/lp.hpp"

namespace pathattack {

struct BnbOptions {
  double time_limit_seconds = 10.0;  // <= 0 disables the limit
  std::int64_t node_limit = 0;       // 0 disables the limit
  double integrality_tol = 1e-6;
  SimplexOptions lp;
};

enum class BnbStatus { kOptimal, kInfeasible, kTimedOut };

struct BnbResult {
  BnbStatus status = BnbStatus::kInfeasible;
  std::vector<double> values;  // best incumbent; empty when none was found
  double objective_value = 0.0;
  std::int64_t nodes = 0;
  int workers = 1;
};

// Depth-first branch and bound over the variables marked binary, branching on
// the most fractional one and re-solving the relaxation at every node.
BnbResult solve_binary(const LinearProgram& lp, const BnbOptions& options = {});

}  // namespace pathattack
