#pragma once

#include <functional>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"
#include "pathattack/target_cut.hpp"

namespace pathattack {

inline constexpr int kBruteForceMaxEdges = 14;

// Cheapest subset of `candidates` (indices into `costs`) accepted by
// `accept`. Subsets are visited in nondecreasing total cost, so the first
// accepted one is optimal. Returns nullopt when none is.
std::optional<std::vector<int>> cheapest_accepted_subset(
    const std::vector<double>& costs, const std::vector<int>& candidates,
    const std::function<bool(const std::vector<int>&)>& accept);

// Exact Force Path Cut. Candidates are the edges outside keep and p_star.
// Throws TooLarge beyond max_edges candidates and InfeasibleInstance when
// cutting every candidate still leaves a competitor.
CutSolution brute_force_path_cut(const Graph& g, const Path& p_star, const EdgeSet& keep = {},
                                 int max_edges = kBruteForceMaxEdges);

// Exact Force Edge Cut / Force Node Cut. status is kNoThroughPath when g has
// no s-t path through the target.
CutSolution brute_force_target_cut(const Graph& g, NodeId s, NodeId t, const Target& target,
                                   int max_edges = kBruteForceMaxEdges);

struct NodeCutOptimum {
  NodeSet removed;
  double cost = 0.0;
};

// Exact Force Path Remove: cheapest node set off p_star whose removal leaves
// p_star strictly shortest. Throws TooLarge and InfeasibleInstance.
NodeCutOptimum brute_force_node_removal(const Graph& g, const Path& p_star,
                                        const std::vector<double>& node_cost,
                                        int max_nodes = kBruteForceMaxEdges);

}  // namespace pathattack
