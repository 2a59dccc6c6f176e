#pragma once

#include <span>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"
#include "pathattack/target_cut.hpp"

namespace pathattack {

// Repeatedly takes the shortest path other than p_star and, while it is not
// longer than p_star, cuts its cheapest edge outside keep and p_star. Ties go
// to the lower edge id. Throws Stuck.
CutSolution greedy_cost_baseline(const Graph& g, const Path& p_star, const EdgeSet& keep = {});

struct PowerIterationOptions {
  double tolerance = 1e-8;  // on ||A x - lambda x|| with ||x|| = 1
  int max_iterations = 100000;
};

// Principal eigenvector of the adjacency matrix of the undirected view of g,
// unit norm and nonnegative. Power iteration runs on A + I so bipartite
// graphs converge too. Throws NonConvergence.
std::vector<double> principal_eigenvector(const Graph& g, const PowerIterationOptions& options = {});

// x_u * x_v for every edge.
std::vector<double> eigenscores(const Graph& g, std::span<const double> eigenvector);

// Greedy loop cutting the competitor edge with the largest eigenscore/cost.
// Zero-cost edges rank first. An empty `eigenvector` is computed here.
CutSolution greedy_eigenscore_baseline(const Graph& g, const Path& p_star, const EdgeSet& keep = {},
                                       std::span<const double> eigenvector = {});

// Node-removal form of GreedyCost: removes the cheapest node of each
// competitor that is not on p_star. `cut` holds node ids; `node_cost` empty
// means degree. Throws Stuck.
CutSolution greedy_cost_node_baseline(const Graph& g, const Path& p_star,
                                      const std::vector<double>& node_cost = {});

}  // namespace pathattack
