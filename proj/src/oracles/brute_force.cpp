#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <queue>

#include "pathattack/attack.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/oracles.hpp"

namespace pathattack {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::optional<std::vector<int>> cheapest_accepted_subset(
    const std::vector<double>& costs, const std::vector<int>& candidates,
    const std::function<bool(const std::vector<int>&)>& accept) {
  if (candidates.size() > 62) throw TooLarge("too many candidates for subset enumeration");
  // Positions sorted by cost, so that from a subset whose highest position is
  // i the two successors "add i+1" and "replace i by i+1" never cost less.
  // Every nonempty subset is reached exactly once from {0}.
  std::vector<int> order = candidates;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return costs[a] < costs[b]; });
  const int n = static_cast<int>(order.size());

  auto decode = [&](std::uint64_t mask) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) out.push_back(order[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto cost_of = [&](std::uint64_t mask) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += costs[order[i]];
    }
    return sum;
  };

  if (accept({})) return std::vector<int>{};
  if (n == 0) return std::nullopt;

  struct Entry {
    double cost;
    std::uint64_t mask;
    int top;
  };
  auto later = [](const Entry& a, const Entry& b) {
    return a.cost != b.cost ? a.cost > b.cost : a.mask > b.mask;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> heap(later);
  heap.push({cost_of(1), 1, 0});
  while (!heap.empty()) {
    const Entry e = heap.top();
    heap.pop();
    std::vector<int> subset = decode(e.mask);
    if (accept(subset)) return subset;
    if (e.top + 1 < n) {
      const std::uint64_t next = std::uint64_t{1} << (e.top + 1);
      const std::uint64_t add = e.mask | next;
      const std::uint64_t swap = (e.mask & ~(std::uint64_t{1} << e.top)) | next;
      heap.push({cost_of(add), add, e.top + 1});
      heap.push({cost_of(swap), swap, e.top + 1});
    }
  }
  return std::nullopt;
}

CutSolution brute_force_path_cut(const Graph& g, const Path& p_star, const EdgeSet& keep,
                                 int max_edges) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_valid_path(g, p_star)) throw InvalidParameter("target path is not present in the graph");
  EdgeMask fixed(g.num_edges(), keep);
  for (EdgeId e : p_star.edges) fixed.set(e);
  std::vector<int> candidates;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!fixed.test(e)) candidates.push_back(e);
  }
  if (static_cast<int>(candidates.size()) > max_edges) {
    throw TooLarge(std::to_string(candidates.size()) + " candidate edges exceed the limit of " +
                   std::to_string(max_edges));
  }
  std::vector<double> costs(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) costs[e] = g.cost(e);

  auto best = cheapest_accepted_subset(
      costs, candidates, [&](const std::vector<int>& cut) { return is_valid_path_cut(g, p_star, cut); });
  if (!best) throw InfeasibleInstance("no edge subset makes the target path strictly shortest");

  CutSolution sol;
  sol.cut = *best;
  sol.cost = total_cost(g, sol.cut);
  sol.valid = true;
  sol.through_path = p_star;
  sol.b_lower = sol.b_upper = sol.cost;
  sol.wall_time_seconds = seconds_since(start);
  return sol;
}

CutSolution brute_force_target_cut(const Graph& g, NodeId s, NodeId t, const Target& target,
                                   int max_edges) {
  const auto start = std::chrono::steady_clock::now();
  if (!g.valid_node(s) || !g.valid_node(t) || s == t) throw InvalidParameter("bad terminals");
  if (target.is_edge() ? !g.valid_edge(target.id) : !g.valid_node(target.id)) {
    throw InvalidParameter("target outside the graph");
  }
  CutSolution sol;
  if (!shortest_path_via(g, s, t, target)) {
    sol.status = CutStatus::kNoThroughPath;
    sol.wall_time_seconds = seconds_since(start);
    return sol;
  }
  std::vector<int> candidates;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!(target.is_edge() && e == target.id)) candidates.push_back(e);
  }
  if (static_cast<int>(candidates.size()) > max_edges) {
    throw TooLarge(std::to_string(candidates.size()) + " candidate edges exceed the limit of " +
                   std::to_string(max_edges));
  }
  std::vector<double> costs(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) costs[e] = g.cost(e);

  // Keeping only a through-target path is always valid, so a cut exists.
  auto best = cheapest_accepted_subset(costs, candidates, [&](const std::vector<int>& cut) {
    return is_valid_target_cut(g, s, t, target, cut);
  });
  if (!best) throw NumericalInstability("no valid target cut found although a through path exists");
  sol.cut = *best;
  sol.cost = total_cost(g, sol.cut);
  sol.valid = true;
  sol.through_path = shortest_path(g, s, t, EdgeMask(g.num_edges(), sol.cut));
  sol.b_lower = sol.b_upper = sol.cost;
  sol.wall_time_seconds = seconds_since(start);
  return sol;
}

NodeCutOptimum brute_force_node_removal(const Graph& g, const Path& p_star,
                                        const std::vector<double>& node_cost, int max_nodes) {
  if (!is_valid_path(g, p_star)) throw InvalidParameter("target path is not present in the graph");
  if (static_cast<int>(node_cost.size()) != g.num_nodes()) throw InvalidParameter("node cost vector size");
  std::vector<int> candidates;
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    if (!p_star.uses_node(n)) candidates.push_back(n);
  }
  if (static_cast<int>(candidates.size()) > max_nodes) {
    throw TooLarge(std::to_string(candidates.size()) + " candidate nodes exceed the limit of " +
                   std::to_string(max_nodes));
  }
  auto best = cheapest_accepted_subset(node_cost, candidates, [&](const std::vector<int>& nodes) {
    return is_valid_node_removal(g, p_star, nodes);
  });
  if (!best) throw InfeasibleInstance("no node subset makes the target path strictly shortest");
  NodeCutOptimum out;
  out.removed = *best;
  for (NodeId n : out.removed) out.cost += node_cost[n];
  return out;
}

}  // namespace pathattack
