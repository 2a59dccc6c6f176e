#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pathattack/graph.hpp"

namespace pathattack {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kLe, kGe, kEq };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient), sparse
  Sense sense = Sense::kGe;
  double rhs = 0.0;
  std::string name;
};

// Minimize objective . x subject to rows and per-variable bounds. Bounds
// default to [0, 1]; lower bounds must be finite, upper bounds may be
// infinite. `binary` marks variables for the branch-and-bound solver; the
// simplex solver ignores it.
class LinearProgram {
 public:
  LinearProgram() = default;
  explicit LinearProgram(int num_vars);

  int num_vars() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  int add_var(double cost, double lo = 0.0, double hi = 1.0, bool binary = false, std::string name = {});
  void set_cost(int var, double cost) { objective_.at(var) = cost; }
  void set_bounds(int var, double lo, double hi);
  void set_binary(int var, bool on = true) { binary_.at(var) = on ? 1 : 0; }

  int add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs, std::string name = {});
  int add_eq(std::vector<std::pair<int, double>> coeffs, double rhs) {
    return add_row(std::move(coeffs), Sense::kEq, rhs);
  }
  int add_le(std::vector<std::pair<int, double>> coeffs, double rhs) {
    return add_row(std::move(coeffs), Sense::kLe, rhs);
  }
  int add_ge(std::vector<std::pair<int, double>> coeffs, double rhs) {
    return add_row(std::move(coeffs), Sense::kGe, rhs);
  }

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  double lo(int var) const { return lo_[var]; }
  double hi(int var) const { return hi_[var]; }
  bool binary(int var) const { return binary_[var] != 0; }
  const std::string& var_name(int var) const { return names_[var]; }

  // Largest violation of rows and bounds at x.
  double max_violation(const std::vector<double>& x) const;
  double evaluate(const std::vector<double>& x) const;

 private:
  std::vector<double> objective_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<std::uint8_t> binary_;
  std::vector<std::string> names_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LPSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective_value = 0.0;
  int iterations = 0;
};

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double optimality_tol = 1e-9;  // relative to the largest objective coefficient
  double pivot_tol = 1e-9;
  int degenerate_streak = 50;    // switch to Bland's rule after this many
  int max_iterations = 0;        // 0 picks 100 * (rows + cols) + 1000
};

// Bounded-variable primal simplex on a dense tableau. Deterministic. Throws
// NumericalInstability when the iteration cap is hit or the final point
// violates the rows beyond tolerance.
LPSolution solve(const LinearProgram& lp, const SimplexOptions& options = {});

// Relaxed covering program: minimize costs . delta subject to one
// "sum over row >= 1" per path row, delta in [0, 1], delta fixed to 0 on keep.
// Values are indexed by edge id over the full cost vector. Throws
// InfeasibleCover when a row lies entirely inside keep.
LPSolution solve_cover_lp(const std::vector<double>& costs,
                          const std::vector<std::vector<EdgeId>>& path_rows, const EdgeSet& keep,
                          const SimplexOptions& options = {});

// CPLEX LP text format, readable by common external solvers.
void write_lp_format(const LinearProgram& lp, std::ostream& out);
std::string to_lp_format(const LinearProgram& lp);

}  // namespace pathattack
