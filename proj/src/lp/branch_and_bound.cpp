#include "pathattack/branch_and_bound.hpp"

#include <chrono>
#include <cmath>

#include "pathattack/errors.hpp"

namespace pathattack {
namespace {

class Search {
 public:
  Search(const LinearProgram& lp, const BnbOptions& opt)
      : work_(lp), opt_(opt), start_(std::chrono::steady_clock::now()) {}

  BnbResult run() {
    explore();
    BnbResult r;
    r.nodes = nodes_;
    if (!incumbent_.empty()) {
      r.values = incumbent_;
      r.objective_value = best_;
    }
    if (timed_out_) {
      r.status = BnbStatus::kTimedOut;
    } else {
      r.status = incumbent_.empty() ? BnbStatus::kInfeasible : BnbStatus::kOptimal;
    }
    return r;
  }

 private:
  bool out_of_time() {
    if (opt_.node_limit > 0 && nodes_ >= opt_.node_limit) return true;
    if (opt_.time_limit_seconds <= 0.0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > opt_.time_limit_seconds;
  }

  bool dominated(double bound) const {
    if (incumbent_.empty()) return false;
    return bound >= best_ - 1e-9 * (1.0 + std::abs(best_));
  }

  void explore() {
    if (timed_out_) return;
    if (out_of_time()) {
      timed_out_ = true;
      return;
    }
    ++nodes_;
    const LPSolution sol = solve(work_, opt_.lp);
    if (sol.status != LpStatus::kOptimal) return;
    if (dominated(sol.objective_value)) return;

    int branch = -1;
    double best_frac = 0.0;
    for (int j = 0; j < work_.num_vars(); ++j) {
      if (!work_.binary(j)) continue;
      const double x = sol.values[j];
      const double frac = std::abs(x - std::round(x));
      if (frac > opt_.integrality_tol && frac > best_frac + 1e-12) {
        best_frac = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      incumbent_ = sol.values;
      for (int j = 0; j < work_.num_vars(); ++j) {
        if (work_.binary(j)) incumbent_[j] = std::round(incumbent_[j]);
      }
      best_ = work_.evaluate(incumbent_);
      return;
    }
    const double lo = work_.lo(branch);
    const double hi = work_.hi(branch);
    const double first = sol.values[branch] >= 0.5 ? 1.0 : 0.0;
    for (double v : {first, 1.0 - first}) {
      if (v < lo || v > hi) continue;
      work_.set_bounds(branch, v, v);
      explore();
      work_.set_bounds(branch, lo, hi);
      if (timed_out_) return;
    }
  }

  LinearProgram work_;
  BnbOptions opt_;
  std::chrono::steady_clock::time_point start_;
  std::vector<double> incumbent_;
  double best_ = 0.0;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

BnbResult solve_binary(const LinearProgram& lp, const BnbOptions& options) {
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.binary(j) && (lp.lo(j) < 0.0 || lp.hi(j) > 1.0)) {
      throw InvalidParameter("binary variable with bounds outside [0,1]");
    }
  }
  return Search(lp, options).run();
}

}  // namespace pathattack
