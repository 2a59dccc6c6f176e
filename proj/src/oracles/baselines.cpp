#include "pathattack/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "pathattack/attack.hpp"
#include "pathattack/errors.hpp"

namespace pathattack {
namespace {

// Index into the competitor's edges of the edge to cut, or -1 if all are
// protected.
using Picker = std::function<int(const std::vector<EdgeId>& edges, const EdgeMask& protect)>;

CutSolution greedy_loop(const Graph& g, const Path& p_star, const EdgeSet& keep, const Picker& pick) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_valid_path(g, p_star)) throw InvalidParameter("target path is not present in the graph");
  EdgeMask protect(g.num_edges(), keep);
  for (EdgeId e : p_star.edges) protect.set(e);

  CutSolution sol;
  EdgeMask removed(g.num_edges());
  while (true) {
    auto competitor = next_competing_path(g, p_star, removed);
    if (!competitor || !not_longer(competitor->length, p_star.length)) break;
    std::vector<EdgeId> edges = competitor->edges;
    std::sort(edges.begin(), edges.end());
    const int i = pick(edges, protect);
    if (i < 0) throw Stuck("competing path has only protected edges");
    removed.set(edges[i]);
    ++sol.iterations;
  }
  sol.cut = removed.to_set();
  sol.cost = total_cost(g, sol.cut);
  sol.valid = is_valid_path_cut(g, p_star, sol.cut);
  sol.through_path = p_star;
  sol.b_upper = sol.cost;
  sol.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace

CutSolution greedy_cost_baseline(const Graph& g, const Path& p_star, const EdgeSet& keep) {
  return greedy_loop(g, p_star, keep, [&](const std::vector<EdgeId>& edges, const EdgeMask& protect) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (protect.test(edges[i])) continue;
      if (best < 0 || g.cost(edges[i]) < g.cost(edges[best])) best = i;
    }
    return best;
  });
}

std::vector<double> principal_eigenvector(const Graph& g, const PowerIterationOptions& options) {
  const int n = g.num_nodes();
  if (n == 0) throw EmptyGraph("graph has no nodes");
  // Undirected view: an arc in either direction is one symmetric entry.
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (int it = 0; it < options.max_iterations; ++it) {
    for (int u = 0; u < n; ++u) {
      double sum = x[u];
      for (NodeId v : adj[u]) sum += x[v];
      y[u] = sum;
    }
    double lambda = 0.0;
    double norm2 = 0.0;
    for (int u = 0; u < n; ++u) {
      lambda += x[u] * y[u];
      norm2 += y[u] * y[u];
    }
    double residual2 = 0.0;
    for (int u = 0; u < n; ++u) {
      const double r = y[u] - lambda * x[u];
      residual2 += r * r;
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw NonConvergence("power iteration collapsed to zero");
    for (int u = 0; u < n; ++u) x[u] = y[u] / norm;
    if (std::sqrt(residual2) <= options.tolerance) return x;
  }
  throw NonConvergence("power iteration did not reach the residual tolerance");
}

std::vector<double> eigenscores(const Graph& g, std::span<const double> eigenvector) {
  if (static_cast<int>(eigenvector.size()) != g.num_nodes()) {
    throw InvalidParameter("eigenvector length does not match node count");
  }
  std::vector<double> scores(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    scores[e] = eigenvector[g.edge(e).u] * eigenvector[g.edge(e).v];
  }
  return scores;
}

CutSolution greedy_eigenscore_baseline(const Graph& g, const Path& p_star, const EdgeSet& keep,
                                       std::span<const double> eigenvector) {
  std::vector<double> x;
  if (eigenvector.empty()) {
    x = principal_eigenvector(g);
    eigenvector = x;
  }
  const std::vector<double> scores = eigenscores(g, eigenvector);
  // a ranks above b when score_a / cost_a > score_b / cost_b, compared by
  // cross-multiplication so zero costs need no division.
  auto better = [&](EdgeId a, EdgeId b) {
    const double ca = g.cost(a);
    const double cb = g.cost(b);
    if (ca == 0.0 || cb == 0.0) {
      if (ca == 0.0 && cb == 0.0) return scores[a] > scores[b];
      return ca == 0.0;
    }
    return scores[a] * cb > scores[b] * ca;
  };
  return greedy_loop(g, p_star, keep, [&](const std::vector<EdgeId>& edges, const EdgeMask& protect) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (protect.test(edges[i])) continue;
      if (best < 0 || better(edges[i], edges[best])) best = i;
    }
    return best;
  });
}

CutSolution greedy_cost_node_baseline(const Graph& g, const Path& p_star,
                                      const std::vector<double>& node_cost) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_valid_path(g, p_star)) throw InvalidParameter("target path is not present in the graph");
  std::vector<double> cost = node_cost;
  if (cost.empty()) {
    cost.resize(g.num_nodes());
    for (NodeId n = 0; n < g.num_nodes(); ++n) cost[n] = g.degree(n);
  }
  if (static_cast<int>(cost.size()) != g.num_nodes()) throw InvalidParameter("node cost vector size");

  CutSolution sol;
  NodeSet removed;
  EdgeMask removed_edges(g.num_edges());
  while (true) {
    auto competitor = next_competing_path(g, p_star, removed_edges);
    if (!competitor || !not_longer(competitor->length, p_star.length)) break;
    NodeId best = kNoNode;
    for (NodeId n : competitor->nodes) {
      if (p_star.uses_node(n)) continue;
      if (best == kNoNode || cost[n] < cost[best] || (cost[n] == cost[best] && n < best)) best = n;
    }
    if (best == kNoNode) throw Stuck("competing path has only protected nodes");
    removed.push_back(best);
    for (const Arc& a : g.out_arcs(best)) removed_edges.set(a.edge);
    for (const Arc& a : g.in_arcs(best)) removed_edges.set(a.edge);
    ++sol.iterations;
  }
  std::sort(removed.begin(), removed.end());
  sol.cut = removed;
  for (NodeId n : removed) sol.cost += cost[n];
  sol.valid = is_valid_node_removal(g, p_star, removed);
  sol.through_path = p_star;
  sol.b_upper = sol.cost;
  sol.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace pathattack
