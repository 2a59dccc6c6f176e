#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "enumerate.hpp"
#include "pathattack/config.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/experiment.hpp"
#include "pathattack/generators.hpp"
#include "pathattack/report.hpp"

namespace pa = pathattack;

namespace {

pa::ExperimentConfig small_config() {
  pa::ExperimentConfig cfg;
  cfg.graph.model = pa::GraphModel::er(40, 0.12);
  cfg.weights = "poisson:20";
  cfg.trials = 6;
  cfg.p_star_rank = 5;
  cfg.seed = 31;
  cfg.algorithms = {"greedy_cost", "pathattack_greedy", "pathattack_rand"};
  return cfg;
}

pa::TrialRecord record(int trial, double base, double other) {
  pa::TrialRecord r;
  r.trial = trial;
  r.results = {{"greedy_cost", "ok", base, 1, true, std::nullopt, 0.0},
               {"x", "ok", other, 1, true, std::nullopt, 0.0}};
  return r;
}

}  // namespace

TEST(Config, ParseRoundTripAndRejectUnknown) {
  const pa::ExperimentConfig cfg = pa::parse_config(
      R"({"graph": {"model": "er", "n": 30, "p": 0.2}, "trials": 3, "problem": "edge", "seed": 7})");
  ASSERT_TRUE(cfg.graph.model);
  EXPECT_EQ(cfg.graph.model->n, 30);
  EXPECT_EQ(cfg.trials, 3);
  EXPECT_EQ(cfg.problem, pa::ProblemKind::kEdge);
  EXPECT_EQ(cfg.weights, "uniform:1:41");
  const pa::ExperimentConfig again = pa::parse_config(pa::config_to_json(cfg));
  EXPECT_EQ(pa::config_to_json(again), pa::config_to_json(cfg));
  EXPECT_THROW(pa::parse_config(R"({"trails": 3})"), pa::InvalidParameter);
  EXPECT_THROW(pa::parse_config("{"), pa::ParseError);
}

TEST(Config, MergeOverlaysPresentKeys) {
  pa::ExperimentConfig cfg = small_config();
  pa::merge_config(cfg, R"({"trials": 2})");
  EXPECT_EQ(cfg.trials, 2);
  EXPECT_EQ(cfg.seed, 31u);
  EXPECT_EQ(cfg.weights, "poisson:20");
}

TEST(Summary, MeanAndSampleStandardError) {
  // Ratios 1, 2, 3 against the baseline: mean 2, sample sd 1, stderr 1/sqrt(3).
  const std::vector<pa::TrialRecord> recs{record(0, 2, 2), record(1, 2, 4), record(2, 1, 3)};
  const auto s = pa::summarize(recs, "greedy_cost");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].algorithm, "x");
  EXPECT_EQ(s[1].ratio_count, 3);
  EXPECT_DOUBLE_EQ(s[1].mean_ratio, 2.0);
  EXPECT_NEAR(s[1].stderr_ratio, 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(s[1].mean_cost, 3.0, 1e-12);
}

TEST(Summary, ZeroBaselineRules) {
  const std::vector<pa::TrialRecord> recs{record(0, 0, 0), record(1, 0, 5)};
  const auto s = pa::summarize(recs, "greedy_cost");
  EXPECT_EQ(s[1].ratio_count, 1);
  EXPECT_DOUBLE_EQ(s[1].mean_ratio, 1.0);
}

TEST(Report, CsvRoundTripAndTimings) {
  std::vector<pa::TrialRecord> recs = pa::run_experiment(small_config());
  ASSERT_EQ(recs.size(), 6u);
  const std::string csv = pa::records_to_csv(recs);
  std::vector<pa::TrialRecord> back = pa::records_from_csv(csv);
  EXPECT_EQ(pa::records_to_csv(back), csv);
  pa::apply_timings_csv(back, pa::timings_to_csv(recs));
  for (std::size_t i = 0; i < recs.size(); ++i) {
    ASSERT_EQ(back[i].results.size(), recs[i].results.size());
    for (std::size_t j = 0; j < recs[i].results.size(); ++j) {
      EXPECT_NEAR(back[i].results[j].wall_time_seconds, recs[i].results[j].wall_time_seconds, 1e-6);
    }
  }
  EXPECT_EQ(pa::report_format_for_path("a.json"), pa::ReportFormat::kJson);
  EXPECT_EQ(pa::report_format_for_path("a.txt"), pa::ReportFormat::kMarkdown);
  EXPECT_THROW(pa::write_report({}, pa::ReportFormat::kCsv, "x.csv", "greedy_cost"), pa::InvalidParameter);
}

TEST(Experiment, WorkerCountDoesNotChangeRecords) {
  pa::ExperimentConfig cfg = small_config();
  cfg.workers = 1;
  const std::string one = pa::records_to_csv(pa::run_experiment(cfg));
  cfg.workers = 4;
  EXPECT_EQ(pa::records_to_csv(pa::run_experiment(cfg)), one);
  cfg.seed = 32;
  EXPECT_NE(pa::records_to_csv(pa::run_experiment(cfg)), one);
}

TEST(Experiment, PathRatiosAreBoundedBelowByValidity) {
  const auto recs = pa::run_experiment(small_config());
  for (const auto& r : recs) {
    if (r.status != "ok") continue;
    for (const auto& a : r.results) {
      EXPECT_EQ(a.status, "ok") << a.algorithm;
      EXPECT_TRUE(a.valid) << a.algorithm << " trial " << r.trial;
    }
  }
}

TEST(Experiment, EdgeProblemWithOracle) {
  pa::ExperimentConfig cfg;
  cfg.graph.model = pa::GraphModel::er(9, 0.35);
  cfg.weights = "uniform:1:9";
  cfg.trials = 6;
  cfg.problem = pa::ProblemKind::kEdge;
  cfg.target_skip = 2;
  cfg.oracle_max_elements = 14;
  cfg.seed = 4;
  int compared = 0;
  for (const auto& r : pa::run_experiment(cfg)) {
    if (r.status != "ok" || !r.oracle_cost) continue;
    for (const auto& a : r.results) {
      if (a.status != "ok") continue;
      EXPECT_GE(a.cost, *r.oracle_cost - 1e-6) << a.algorithm;
      if (a.algorithm == "combinatorial") {
        EXPECT_NEAR(a.cost, *r.oracle_cost, 1e-6);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 0);
}

TEST(Terminals, HopDistanceOnLattice) {
  const pa::Graph g = pa::generate(pa::GraphModel::lattice(60, 60), 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [s, t] = pa::select_terminals(g, pa::TerminalRule::hop_distance(50), seed);
    EXPECT_EQ(pa::hop_distances(g, s)[t], 50);
  }
  const pa::Graph tiny = pa::generate(pa::GraphModel::lattice(3, 3), 0);
  EXPECT_THROW(pa::select_terminals(tiny, pa::TerminalRule::hop_distance(50), 0), pa::NoCandidate);
  const auto [s, t] = pa::select_terminals(tiny, pa::TerminalRule::uniform(), 3);
  EXPECT_NE(s, t);
}

TEST(Terminals, TargetElementMatchesEnumeration) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const pa::Graph g = pa::generate(pa::GraphModel::er(12, 0.4), seed);
    const auto paths = pa::testing::all_simple_paths(g, 0, 11, {});
    if (paths.empty()) continue;
    for (pa::ElementKind kind : {pa::ElementKind::kEdge, pa::ElementKind::kNode}) {
      const bool edges = kind == pa::ElementKind::kEdge;
      std::vector<std::int32_t> order;
      std::vector<bool> seen(edges ? g.num_edges() : g.num_nodes(), false);
      for (std::int32_t x : edges ? paths[0].edges : paths[0].nodes) seen[x] = true;
      for (const auto& p : paths) {
        for (std::int32_t x : edges ? p.edges : p.nodes) {
          if (!seen[x]) {
            seen[x] = true;
            order.push_back(x);
          }
        }
      }
      for (int skip : {1, 3, 5}) {
        if (static_cast<int>(order.size()) < skip) {
          EXPECT_THROW(pa::select_target_element(g, 0, 11, kind, skip), pa::Exhausted);
        } else {
          EXPECT_EQ(pa::select_target_element(g, 0, 11, kind, skip), order[skip - 1]);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 20);
}
