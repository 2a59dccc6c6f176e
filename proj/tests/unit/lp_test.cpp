#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "enumerate.hpp"
#include "pathattack/branch_and_bound.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/random.hpp"

namespace pa = pathattack;

namespace {

// Exact LP optimum by vertex enumeration: every choice of n linearly
// independent tight constraints among rows and finite bounds is solved
// densely, and the best feasible point kept. Returns +inf when infeasible.
double vertex_optimum(const pa::LinearProgram& lp) {
  const int n = lp.num_vars();
  struct Plane {
    Eigen::VectorXd a;
    double b;
  };
  std::vector<Plane> planes;
  for (const auto& row : lp.rows()) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
    for (const auto& [j, c] : row.coeffs) a[j] += c;
    planes.push_back({a, row.rhs});
  }
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd a = Eigen::VectorXd::Unit(n, j);
    planes.push_back({a, lp.lo(j)});
    if (std::isfinite(lp.hi(j))) planes.push_back({a, lp.hi(j)});
  }
  const int k = static_cast<int>(planes.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      Eigen::MatrixXd a(n, n);
      Eigen::VectorXd b(n);
      for (int r = 0; r < n; ++r) {
        a.row(r) = planes[pick[r]].a.transpose();
        b[r] = planes[pick[r]].b;
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
      if (lu.rank() < n) return;
      const Eigen::VectorXd x = lu.solve(b);
      std::vector<double> xv(x.data(), x.data() + n);
      if (lp.max_violation(xv) > 1e-9) return;
      best = std::min(best, lp.evaluate(xv));
      return;
    }
    for (int i = start; i < k; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

pa::LinearProgram random_lp(pa::Rng& rng, int n, int m) {
  std::uniform_int_distribution<int> coef(-3, 4);
  pa::LinearProgram lp;
  for (int j = 0; j < n; ++j) lp.add_var(coef(rng), 0.0, 1.0 + (rng() % 3));
  for (int r = 0; r < m; ++r) {
    std::vector<std::pair<int, double>> c;
    for (int j = 0; j < n; ++j) {
      const int v = coef(rng);
      if (v != 0) c.emplace_back(j, v);
    }
    const auto sense = static_cast<pa::Sense>(rng() % 3);
    lp.add_row(std::move(c), sense, coef(rng));
  }
  return lp;
}

}  // namespace

TEST(Simplex, ShortestPathRelaxationIsIntegral) {
  // Triangle a-b-c, weights ab = 1, bc = 1, ac = 3; one variable per arc.
  pa::LinearProgram lp;
  const int ab = lp.add_var(1, 0, pa::kLpInfinity), ba = lp.add_var(1, 0, pa::kLpInfinity);
  const int bc = lp.add_var(1, 0, pa::kLpInfinity), cb = lp.add_var(1, 0, pa::kLpInfinity);
  const int ac = lp.add_var(3, 0, pa::kLpInfinity), ca = lp.add_var(3, 0, pa::kLpInfinity);
  lp.add_eq({{ab, 1}, {ba, -1}, {ac, 1}, {ca, -1}}, 1);    // a: out - in
  lp.add_eq({{ba, 1}, {ab, -1}, {bc, 1}, {cb, -1}}, 0);    // b
  lp.add_eq({{cb, 1}, {bc, -1}, {ca, 1}, {ac, -1}}, -1);   // c
  const pa::LPSolution s = pa::solve(lp);
  ASSERT_EQ(s.status, pa::LpStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 2.0, 1e-12);
  const std::vector<double> want{1, 0, 1, 0, 0, 0};
  for (int j = 0; j < 6; ++j) EXPECT_NEAR(s.values[j], want[j], 1e-12);
}

TEST(Simplex, MatchesVertexEnumerationOnRandomPrograms) {
  pa::Rng rng(5);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    const pa::LinearProgram lp = random_lp(rng, n, m);
    const double oracle = vertex_optimum(lp);
    const pa::LPSolution s = pa::solve(lp);
    if (std::isinf(oracle)) {
      EXPECT_EQ(s.status, pa::LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ++feasible;
    ASSERT_EQ(s.status, pa::LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(s.objective_value, oracle, 1e-7) << "trial " << trial;
    EXPECT_LE(lp.max_violation(s.values), 1e-7);
  }
  EXPECT_GT(feasible, 100);
}

TEST(Simplex, DetectsUnboundedness) {
  pa::LinearProgram lp;
  const int x = lp.add_var(-1, 0, pa::kLpInfinity);
  const int y = lp.add_var(0, 0, pa::kLpInfinity);
  lp.add_ge({{x, 1}, {y, -1}}, 1);
  EXPECT_EQ(pa::solve(lp).status, pa::LpStatus::kUnbounded);
}

TEST(CoverLp, EqualsVertexEnumerationOnEightEdgeInstance) {
  // Four path rows over eight edges, costs chosen so the optimum is
  // fractional (the odd cycle 0-1-2 drives it to halves).
  const std::vector<double> costs{2, 2, 2, 5, 1, 4, 3, 6};
  const std::vector<std::vector<pa::EdgeId>> rows{{0, 1, 3}, {1, 2, 5}, {0, 2, 6}, {3, 4, 7}};
  const pa::LPSolution s = pa::solve_cover_lp(costs, rows, {});
  ASSERT_EQ(s.status, pa::LpStatus::kOptimal);

  pa::LinearProgram direct;
  for (double c : costs) direct.add_var(c);
  for (const auto& r : rows) {
    std::vector<std::pair<int, double>> c;
    for (pa::EdgeId e : r) c.emplace_back(e, 1.0);
    direct.add_ge(std::move(c), 1.0);
  }
  const double oracle = vertex_optimum(direct);
  EXPECT_NEAR(s.objective_value, oracle, 1e-9);
  EXPECT_NEAR(oracle, 4.0, 1e-9);
  EXPECT_NEAR(s.values[0], 0.5, 1e-9);
}

TEST(CoverLp, KeepAndInfeasibleRows) {
  const std::vector<double> costs{1, 1, 1};
  const pa::LPSolution s = pa::solve_cover_lp(costs, {{0, 1}, {1, 2}}, {1});
  ASSERT_EQ(s.status, pa::LpStatus::kOptimal);
  EXPECT_NEAR(s.objective_value, 2.0, 1e-12);
  EXPECT_EQ(s.values[1], 0.0);
  EXPECT_THROW(pa::solve_cover_lp(costs, {{1}}, {1}), pa::InfeasibleCover);
}

TEST(BranchAndBound, MatchesEnumerationOfBinaryAssignments) {
  pa::Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const int m = 2 + static_cast<int>(rng() % 4);
    pa::LinearProgram lp;
    std::uniform_int_distribution<int> coef(-4, 6);
    for (int j = 0; j < n; ++j) lp.add_var(coef(rng), 0.0, 1.0, true);
    for (int r = 0; r < m; ++r) {
      std::vector<std::pair<int, double>> c;
      for (int j = 0; j < n; ++j) c.emplace_back(j, coef(rng));
      lp.add_row(std::move(c), r % 2 ? pa::Sense::kLe : pa::Sense::kGe, coef(rng));
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> vars(n);
    for (int j = 0; j < n; ++j) vars[j] = j;
    pa::testing::for_each_subset(vars, [&](const std::vector<int>& ones) {
      std::vector<double> x(n, 0.0);
      for (int j : ones) x[j] = 1.0;
      if (lp.max_violation(x) <= 1e-9) best = std::min(best, lp.evaluate(x));
    });
    const pa::BnbResult r = pa::solve_binary(lp, {});
    if (std::isinf(best)) {
      EXPECT_EQ(r.status, pa::BnbStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(r.status, pa::BnbStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(r.objective_value, best, 1e-7) << "trial " << trial;
    for (double v : r.values) EXPECT_TRUE(v == 0.0 || v == 1.0);
  }
}

TEST(BranchAndBound, NodeLimitReportsTimeout) {
  pa::LinearProgram lp;
  for (int j = 0; j < 12; ++j) lp.add_var(1.0 + j * 0.01, 0.0, 1.0, true);
  for (int j = 0; j + 1 < 12; ++j) lp.add_ge({{j, 2.0}, {j + 1, 2.0}}, 1.0);
  pa::BnbOptions opt;
  opt.node_limit = 1;
  EXPECT_EQ(pa::solve_binary(lp, opt).status, pa::BnbStatus::kTimedOut);
  pa::LinearProgram bad;
  bad.add_var(1.0, 0.0, 2.0, true);
  EXPECT_THROW(pa::solve_binary(bad), pa::InvalidParameter);
}

TEST(LpFormat, WritesSectionsAndBinaries) {
  pa::LinearProgram lp;
  const int x = lp.add_var(2.0, 0.0, 1.0, true, "x");
  const int y = lp.add_var(-1.0, 0.0, pa::kLpInfinity, false, "y");
  lp.add_row({{x, 1.0}, {y, 3.0}}, pa::Sense::kLe, 4.0, "cap");
  const std::string text = pa::to_lp_format(lp);
  EXPECT_NE(text.find("Minimize\n obj: 2 x - y\n"), std::string::npos) << text;
  EXPECT_NE(text.find(" cap: x + 3 y <= 4\n"), std::string::npos) << text;
  EXPECT_NE(text.find("0 <= y <= +inf"), std::string::npos);
  EXPECT_NE(text.find("Binaries\n x\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "End\n");
}
