#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/path_cover.hpp"
#include "pathattack/paths.hpp"

namespace pathattack {

enum class Engine { kGreedy, kRand };

std::string engine_name(Engine engine);
Engine parse_engine(const std::string& name);

// A competitor of a path of length `target` is any path no longer than it,
// up to this relative slack.
bool not_longer(double length, double target);

struct PathAttackOptions {
  Engine engine = Engine::kRand;
  std::uint64_t seed = 0;
  int iteration_cap = 0;       // 0 picks 10 * M
  EdgeSet base_removed;        // edges already absent from the graph
  RandCoverOptions rand;
};

struct PathAttackReport {
  // Cut elements: edge ids, or node ids for the node-removal variant.
  CoverResult cut;
  int iterations = 0;
  std::vector<Path> generated_paths;
  bool final_check = false;  // p* intact and strictly shortest afterwards
  double wall_time_seconds = 0.0;
};

// Constraint generation: ask the oracle for the shortest path other than
// p_star, add it to the path set while it is not longer than p_star, and
// re-solve the cover from scratch. Throws InfeasibleCover and IterationCap.
// Edges of p_star outside `keep` may be cut, which the search procedures use
// for lower bounds; final_check is then false whenever p_star was cut.
PathAttackReport pathattack(const Graph& g, const Path& p_star, const EdgeSet& keep,
                            const PathAttackOptions& options = {});

// Removal of `cut` leaves p_star intact and strictly shorter than every other
// s-t path.
bool is_valid_path_cut(const Graph& g, const Path& p_star, const EdgeSet& cut);

// True iff p_star is strictly shortest in the subgraph induced by its nodes,
// the condition under which removing other nodes can isolate it.
bool check_node_removal_feasible(const Graph& g, const Path& p_star);

struct NodeAttackInstance {
  const Graph* graph = nullptr;
  Path p_star;
  std::vector<double> node_cost;  // empty: each node costs its degree
  NodeSet protected_nodes;        // s, t and p_star nodes are always added
};

// Node-removal form of the constraint generation; report.cut lists node ids.
// Throws InfeasibleInstance when check_node_removal_feasible fails.
PathAttackReport pathattack_nodes(const NodeAttackInstance& inst, Engine engine, std::uint64_t seed,
                                  int iteration_cap = 0);

// Edges incident to any of the nodes.
EdgeSet incident_edges(const Graph& g, const NodeSet& nodes);

bool is_valid_node_removal(const Graph& g, const Path& p_star, const NodeSet& removed);

}  // namespace pathattack
