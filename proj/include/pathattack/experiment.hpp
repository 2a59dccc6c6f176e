#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathattack/generators.hpp"
#include "pathattack/graph.hpp"
#include "pathattack/target_cut.hpp"
#include "pathattack/weights.hpp"

namespace pathattack {

struct TerminalRule {
  enum class Kind { kUniform, kHopDistance };
  Kind kind = Kind::kUniform;
  int hops = 50;

  static TerminalRule uniform() { return {}; }
  static TerminalRule hop_distance(int h) { return {Kind::kHopDistance, h}; }
};

// uniform: s uniform, then t uniform over the other nodes. hop_distance: s is
// drawn uniformly among nodes with at least one node exactly h hops away, and
// t uniformly among those. Throws NoCandidate.
std::pair<NodeId, NodeId> select_terminals(const Graph& g, const TerminalRule& rule, std::uint64_t seed);

enum class ElementKind { kEdge, kNode };

// Walks the successive shortest simple s-t paths and returns the skip-th
// element (1-based) not on the first one, in order of first appearance.
// Throws Exhausted when the paths run out or `path_cap` paths were seen.
std::int32_t select_target_element(const Graph& g, NodeId s, NodeId t, ElementKind kind, int skip = 5,
                                   std::size_t path_cap = 100000);

// path: Force Path Cut. edge, node: Force Edge/Node Cut. remove: node removal
// against a path (Force Path Remove) with degree costs.
enum class ProblemKind { kPath, kEdge, kNode, kRemove };

std::string problem_name(ProblemKind kind);
ProblemKind parse_problem(const std::string& name);

struct GraphSource {
  std::optional<GraphModel> model;  // regenerated per trial
  std::string file;                 // loaded once and shared
  bool directed = false;
};

struct ExperimentConfig {
  GraphSource graph;
  std::string weights = "uniform:1:41";  // WeightScheme::parse syntax
  int trials = 10;
  int p_star_rank = 10;
  ProblemKind problem = ProblemKind::kPath;
  // Empty picks every algorithm that applies to the problem.
  std::vector<std::string> algorithms;
  std::uint64_t seed = 1;
  TimeLimits limits;
  Engine target_engine = Engine::kRand;  // inside the target-cut searches
  TerminalRule terminals;
  int neighborhood_hops = 0;  // > 0 restricts each trial to this ball around s
  int target_skip = 5;
  // Exact oracle on instances with at most this many candidate edges or
  // nodes; 0 disables it.
  int oracle_max_elements = 0;
  int workers = 0;  // 0 reads PATHATTACK_WORKERS, default 1
  std::string output;

  void validate() const;  // throws InvalidParameter
};

// Algorithm names accepted for each problem; the first is the ratio baseline.
std::vector<std::string> algorithms_for(ProblemKind kind);
std::string baseline_algorithm(ProblemKind kind);

struct AlgorithmResult {
  std::string algorithm;
  std::string status = "ok";  // ok, timeout, or the failure class
  double cost = 0.0;
  int iterations = 0;
  bool valid = false;
  std::optional<bool> optimal;  // when the oracle ran
  double wall_time_seconds = 0.0;
};

struct TrialRecord {
  int trial = 0;
  std::string graph_id;
  std::string status = "ok";  // ok, unreachable, exhausted, no_candidate, infeasible, error
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  double p_star_length = 0.0;
  int p_star_hops = 0;
  std::int32_t target = -1;
  std::optional<double> oracle_cost;
  std::vector<AlgorithmResult> results;
};

// Trial i uses seed mix_seed(cfg.seed, i); records come back in trial order
// whatever the worker count.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

// Worker count after applying the environment default.
int resolve_workers(int requested);

}  // namespace pathattack
