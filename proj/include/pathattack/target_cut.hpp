#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathattack/attack.hpp"
#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"

namespace pathattack {

struct Target {
  enum class Kind { kEdge, kNode };
  Kind kind = Kind::kEdge;
  std::int32_t id = -1;

  static Target edge(EdgeId e) { return {Kind::kEdge, e}; }
  static Target node(NodeId v) { return {Kind::kNode, v}; }
  bool is_edge() const { return kind == Kind::kEdge; }
};

// Edges a path must avoid to miss the target: {e*}, or every edge at v*.
EdgeSet target_edges(const Graph& g, const Target& target);

// Shortest simple s-t path through the target, avoiding `removed`.
std::optional<Path> shortest_path_via(const Graph& g, NodeId s, NodeId t, const Target& target,
                                      const EdgeMask& removed = {});

bool path_uses_target(const Path& p, const Target& target);

// After removing `cut`, an s-t path exists and the shortest one avoiding the
// target is strictly longer than the shortest one overall, so every shortest
// path uses the target.
bool is_valid_target_cut(const Graph& g, NodeId s, NodeId t, const Target& target, const EdgeSet& cut);

struct TimeLimits {
  double per_solve = 10.0;   // one joint-program solve
  double per_budget = 60.0;  // one constraint-generation run at a fixed budget
  double total = 600.0;      // one whole search
};

struct TargetCutInstance {
  const Graph* graph = nullptr;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  Target target;
  double eps = -1.0;  // negative picks 1e-6 * (sum of all costs)
  TimeLimits limits;
  Engine engine = Engine::kRand;  // cover engine inside the PATHATTACK calls
  std::uint64_t seed = 0;

  double tolerance() const;
  void validate() const;  // throws InvalidParameter
};

enum class CutStatus { kSolved, kNoThroughPath, kTimedOut };

struct CutSolution {
  CutStatus status = CutStatus::kSolved;
  EdgeSet cut;
  double cost = 0.0;
  bool valid = false;
  std::optional<Path> through_path;  // shortest s-t path once cut is applied
  int iterations = 0;
  int pathattack_calls = 0;
  int joint_solves = 0;
  double b_lower = 0.0;
  double b_upper = 0.0;
  // (b_lower, b_upper) after every search iteration.
  std::vector<std::pair<double, double>> bound_trace;
  EdgeSet always;  // heuristic search only
  EdgeSet never;
  int workers = 1;
  double wall_time_seconds = 0.0;
};

// Binary form of the joint path-and-cut program. One path runs from s to the
// head side of the target and one from the tail side to t; cut variables
// must cover every path in `cover_paths`, stay within `budget`, and avoid the
// chosen path (linearized as x_e + delta_e <= 1 on binaries).
struct JointProgram {
  const Graph* graph = nullptr;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  Target target;
  double budget = 0.0;
  std::vector<Path> cover_paths;
  EdgeSet removed;  // absent edges: no path or cut variable may use them
};

enum class JointStatus { kSolved, kInfeasible, kTimedOut };

struct JointResult {
  JointStatus status = JointStatus::kInfeasible;
  Path path;      // through-target path chosen by the program
  EdgeSet cut;    // redundant cut edges already pruned
  std::int64_t nodes = 0;
};

// Exact solve by branch and bound; undirected target edges are solved in both
// orientations and the shorter path kept.
JointResult solve_joint_program(const JointProgram& jp, double time_limit_seconds);

struct ConstraintGenResult {
  JointStatus status = JointStatus::kInfeasible;
  EdgeSet cut;
  std::optional<Path> path;
  int joint_solves = 0;
};

// Alternates joint solves with the oracle "shortest path avoiding cut and
// target"; competitors not longer than the chosen through path join `paths`.
// `paths` is shared across calls so that the search can keep or drop them.
ConstraintGenResult edge_cut_constraint_generation(const TargetCutInstance& inst, double budget,
                                                   std::vector<Path>& paths,
                                                   double time_limit_seconds = 0.0);

// Binary search on the budget between certified bounds.
CutSolution combinatorial_search(const TargetCutInstance& inst);

// Polynomial-time search that grows forced-removal and forced-keep sets.
CutSolution heuristic_search(const TargetCutInstance& inst);

// PATHATTACK on the shortest through-target path with that path protected.
CutSolution path_targeted_attack(const TargetCutInstance& inst);

enum class SearchMode { kHeuristic, kCombinatorial, kPathTargeted };
std::string mode_name(SearchMode mode);
SearchMode parse_mode(const std::string& name);

// Dispatch for node targets (and edge targets alike).
CutSolution node_cut_search(const TargetCutInstance& inst, SearchMode mode);
CutSolution target_cut_search(const TargetCutInstance& inst, SearchMode mode);

}  // namespace pathattack
