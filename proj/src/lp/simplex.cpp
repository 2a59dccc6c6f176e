#include <algorithm>
#include <cmath>

#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/simd/kernels.hpp"

namespace pathattack {
namespace {

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper };

// Tableau over structural columns, one slack per row, and artificials for the
// rows whose slack cannot start basic. Row i reads
//   a_i . x + s_i + sigma_i * r_i = rhs_i
// with s_i in [0, inf) for <=, (-inf, 0] for >=, [0, 0] for =.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const SimplexOptions& opt)
      : lp_(lp), opt_(opt), kern_(simd::active()) {
    n_ = lp.num_vars();
    m_ = lp.num_rows();
    std::vector<double> start(n_);
    for (int j = 0; j < n_; ++j) start[j] = lp.lo(j);
    std::vector<int> art_rows;
    std::vector<double> residual(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& row = lp.rows()[i];
      double lhs = 0.0;
      for (const auto& [var, c] : row.coeffs) lhs += c * start[var];
      residual[i] = row.rhs - lhs;
      const double slo = row.sense == Sense::kLe ? 0.0 : row.sense == Sense::kGe ? -kLpInfinity : 0.0;
      const double shi = row.sense == Sense::kLe ? kLpInfinity : 0.0;
      if (residual[i] < slo || residual[i] > shi) art_rows.push_back(i);
    }
    k_ = static_cast<int>(art_rows.size());
    cols_ = n_ + m_ + k_;
    stride_ = cols_;
    t_.assign(static_cast<std::size_t>(m_) * stride_, 0.0);
    lb_.assign(cols_, 0.0);
    ub_.assign(cols_, 0.0);
    state_.assign(cols_, VarState::kAtLower);
    basis_.assign(m_, -1);
    init_basis_.assign(m_, -1);
    init_sign_.assign(m_, 1.0);
    xb_.assign(m_, 0.0);
    art_col_.assign(m_, -1);
    for (int j = 0; j < n_; ++j) {
      lb_[j] = lp.lo(j);
      ub_[j] = lp.hi(j);
    }
    for (int i = 0; i < m_; ++i) {
      const auto sense = lp.rows()[i].sense;
      const int s = n_ + i;
      lb_[s] = sense == Sense::kGe ? -kLpInfinity : 0.0;
      ub_[s] = sense == Sense::kLe ? kLpInfinity : 0.0;
    }
    for (int a = 0; a < k_; ++a) {
      const int i = art_rows[a];
      const int col = n_ + m_ + a;
      art_col_[i] = col;
      lb_[col] = 0.0;
      ub_[col] = kLpInfinity;
      init_sign_[i] = residual[i] >= 0.0 ? 1.0 : -1.0;
    }
    for (int i = 0; i < m_; ++i) {
      double* row = t_.data() + static_cast<std::size_t>(i) * stride_;
      for (const auto& [var, c] : lp.rows()[i].coeffs) row[var] += c;
      row[n_ + i] = 1.0;
      const int s = n_ + i;
      if (art_col_[i] >= 0) {
        row[art_col_[i]] = init_sign_[i];
        // Slack waits at the bound it cannot leave.
        state_[s] = lb_[s] == 0.0 ? VarState::kAtLower : VarState::kAtUpper;
        basis_[i] = art_col_[i];
        if (init_sign_[i] < 0.0) kern_.scale(-1.0, row, cols_);
      } else {
        basis_[i] = s;
      }
      init_basis_[i] = basis_[i];
      state_[basis_[i]] = VarState::kBasic;
    }
    for (int j = 0; j < n_; ++j) state_[j] = VarState::kAtLower;
    max_iter_ = opt.max_iterations > 0 ? opt.max_iterations : 100 * (m_ + cols_) + 1000;
    recompute_basic_values();
  }

  bool needs_phase_one() const { return k_ > 0; }

  // Returns false when unbounded.
  bool run(const std::vector<double>& cost) {
    cost_ = cost;
    double cmax = 1.0;
    for (double c : cost_) cmax = std::max(cmax, std::abs(c));
    opt_tol_ = opt_.optimality_tol * cmax;
    recompute_reduced_costs();
    for (int refresh = 0; refresh < 4; ++refresh) {
      const int r = iterate();
      if (r < 0) return false;
      recompute_basic_values();
      recompute_reduced_costs();
      if (choose_entering() < 0) return true;
    }
    return true;
  }

  double artificial_sum() const {
    double sum = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_) sum += std::max(0.0, xb_[i]);
    }
    return sum;
  }

  void retire_artificials() {
    for (int col = n_ + m_; col < cols_; ++col) {
      ub_[col] = 0.0;
      if (state_[col] != VarState::kBasic) state_[col] = VarState::kAtLower;
    }
    recompute_basic_values();
  }

  std::vector<double> phase_one_cost() const {
    std::vector<double> c(cols_, 0.0);
    for (int col = n_ + m_; col < cols_; ++col) c[col] = 1.0;
    return c;
  }

  std::vector<double> phase_two_cost() const {
    std::vector<double> c(cols_, 0.0);
    for (int j = 0; j < n_; ++j) c[j] = lp_.objective()[j];
    return c;
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) x[j] = nonbasic_value(j);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = xb_[i];
    }
    for (int j = 0; j < n_; ++j) x[j] = std::clamp(x[j], lb_[j], ub_[j]);
    return x;
  }

  int iterations() const { return iterations_; }

 private:
  double* row(int i) { return t_.data() + static_cast<std::size_t>(i) * stride_; }
  const double* row(int i) const { return t_.data() + static_cast<std::size_t>(i) * stride_; }

  double nonbasic_value(int j) const { return state_[j] == VarState::kAtUpper ? ub_[j] : lb_[j]; }

  // Original column entry of a slack or artificial at row i.
  double unit_column(int col, int i) const {
    if (col >= n_ + m_) return col == art_col_[i] ? init_sign_[i] : 0.0;
    return col == n_ + i ? 1.0 : 0.0;
  }

  // x_B = B^-1 (rhs - N x_N), with B^-1 read from the columns of the starting
  // basis. Clears drift accumulated by incremental updates.
  void recompute_basic_values() {
    std::vector<double> r(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& lprow = lp_.rows()[i];
      double v = lprow.rhs;
      for (const auto& [var, c] : lprow.coeffs) {
        if (state_[var] != VarState::kBasic) v -= c * nonbasic_value(var);
      }
      const int s = n_ + i;
      if (state_[s] != VarState::kBasic) v -= nonbasic_value(s);
      if (art_col_[i] >= 0 && state_[art_col_[i]] != VarState::kBasic) {
        v -= init_sign_[i] * nonbasic_value(art_col_[i]);
      }
      r[i] = v;
    }
    for (int i = 0; i < m_; ++i) {
      const double* ti = row(i);
      double v = 0.0;
      for (int q = 0; q < m_; ++q) v += ti[init_basis_[q]] / unit_column(init_basis_[q], q) * r[q];
      xb_[i] = v;
    }
  }

  void recompute_reduced_costs() {
    d_.assign(cols_, 0.0);
    for (int j = 0; j < cols_; ++j) d_[j] = cost_[j];
    for (int i = 0; i < m_; ++i) {
      const double cb = cost_[basis_[i]];
      if (cb != 0.0) kern_.axpy(-cb, row(i), d_.data(), cols_);
    }
    for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
  }

  int choose_entering() const {
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::kBasic || lb_[j] == ub_[j]) continue;
      double score = 0.0;
      if (state_[j] == VarState::kAtLower && d_[j] < -opt_tol_) score = -d_[j];
      if (state_[j] == VarState::kAtUpper && d_[j] > opt_tol_) score = d_[j];
      if (score == 0.0) continue;
      if (bland_) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  // Runs pivots until optimal (0) or unbounded (-1).
  int iterate() {
    while (true) {
      const int j = choose_entering();
      if (j < 0) return 0;
      if (++iterations_ > max_iter_) throw NumericalInstability("simplex iteration cap reached");
      const double dir = state_[j] == VarState::kAtLower ? 1.0 : -1.0;

      double theta = ub_[j] - lb_[j];  // bound flip distance
      int leave = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = row(i)[j];
        if (std::abs(alpha) <= opt_.pivot_tol) continue;
        const double rate = -dir * alpha;  // d x_B[i] / d theta
        const int b = basis_[i];
        double limit;
        if (rate < 0.0) {
          if (lb_[b] == -kLpInfinity) continue;
          limit = (xb_[i] - lb_[b]) / -rate;
        } else {
          if (ub_[b] == kLpInfinity) continue;
          limit = (ub_[b] - xb_[i]) / rate;
        }
        limit = std::max(limit, 0.0);
        bool take = false;
        if (limit < theta - 1e-12) {
          take = true;
        } else if (leave >= 0 && limit <= theta + 1e-12) {
          take = bland_ ? basis_[i] < basis_[leave] : std::abs(alpha) > std::abs(leave_alpha);
        }
        if (take) {
          theta = std::min(theta, limit);
          leave = i;
          leave_alpha = alpha;
        }
      }
      if (leave < 0 && theta == kLpInfinity) return -1;

      if (theta <= 1e-12) {
        if (++degenerate_ >= opt_.degenerate_streak) bland_ = true;
      } else {
        degenerate_ = 0;
        bland_ = false;
      }

      if (theta != 0.0) {
        for (int i = 0; i < m_; ++i) {
          const double alpha = row(i)[j];
          if (alpha != 0.0) xb_[i] -= theta * dir * alpha;
        }
      }
      if (leave < 0) {
        state_[j] = state_[j] == VarState::kAtLower ? VarState::kAtUpper : VarState::kAtLower;
        continue;
      }
      const double entering_value = nonbasic_value(j) + dir * theta;
      const int out = basis_[leave];
      const double rate = -dir * row(leave)[j];
      state_[out] = rate < 0.0 ? VarState::kAtLower : VarState::kAtUpper;
      if (lb_[out] == ub_[out]) state_[out] = VarState::kAtLower;
      pivot(leave, j);
      basis_[leave] = j;
      state_[j] = VarState::kBasic;
      xb_[leave] = entering_value;
    }
  }

  void pivot(int r, int j) {
    double* pr = row(r);
    kern_.scale(1.0 / pr[j], pr, cols_);
    pr[j] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* pi = row(i);
      const double f = pi[j];
      if (f == 0.0) continue;
      kern_.axpy(-f, pr, pi, cols_);
      pi[j] = 0.0;
    }
    const double f = d_[j];
    if (f != 0.0) {
      kern_.axpy(-f, pr, d_.data(), cols_);
      d_[j] = 0.0;
    }
  }

  const LinearProgram& lp_;
  SimplexOptions opt_;
  const simd::Kernels& kern_;
  int n_ = 0;
  int m_ = 0;
  int k_ = 0;
  int cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> t_;
  std::vector<double> lb_;
  std::vector<double> ub_;
  std::vector<VarState> state_;
  std::vector<int> basis_;
  std::vector<int> init_basis_;
  std::vector<double> init_sign_;
  std::vector<int> art_col_;
  std::vector<double> xb_;
  std::vector<double> d_;
  std::vector<double> cost_;
  double opt_tol_ = 1e-9;
  int max_iter_ = 0;
  int iterations_ = 0;
  int degenerate_ = 0;
  bool bland_ = false;
};

}  // namespace

LPSolution solve(const LinearProgram& lp, const SimplexOptions& options) {
  LPSolution sol;
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.lo(j) > lp.hi(j)) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
  }
  Tableau tab(lp, options);
  double rhs_scale = 1.0;
  for (const auto& row : lp.rows()) rhs_scale = std::max(rhs_scale, std::abs(row.rhs));
  if (tab.needs_phase_one()) {
    tab.run(tab.phase_one_cost());
    if (tab.artificial_sum() > options.feasibility_tol * rhs_scale) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = tab.iterations();
      return sol;
    }
    tab.retire_artificials();
  }
  const bool bounded = tab.run(tab.phase_two_cost());
  sol.iterations = tab.iterations();
  if (!bounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.values = tab.structural_values();
  const double violation = lp.max_violation(sol.values);
  if (violation > 1e3 * options.feasibility_tol * rhs_scale) {
    throw NumericalInstability("simplex result violates constraints by " + std::to_string(violation));
  }
  sol.status = LpStatus::kOptimal;
  sol.objective_value = lp.evaluate(sol.values);
  return sol;
}

}  // namespace pathattack
