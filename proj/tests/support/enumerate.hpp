#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"

namespace pathattack::testing {

// Every simple s-t path by depth-first search, sorted by (length, nodes).
inline std::vector<Path> all_simple_paths(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed = {}) {
  std::vector<Path> out;
  Path cur;
  std::vector<char> on(g.num_nodes(), 0);
  std::function<void(NodeId)> dfs = [&](NodeId u) {
    if (u == t) {
      out.push_back(cur);
      return;
    }
    for (const Arc& a : g.out_arcs(u)) {
      if (on[a.head] || removed.test(a.edge)) continue;
      on[a.head] = 1;
      cur.nodes.push_back(a.head);
      cur.edges.push_back(a.edge);
      cur.length += g.weight(a.edge);
      dfs(a.head);
      cur.length -= g.weight(a.edge);
      cur.edges.pop_back();
      cur.nodes.pop_back();
      on[a.head] = 0;
    }
  };
  cur.nodes.push_back(s);
  on[s] = 1;
  dfs(s);
  for (Path& p : out) p.length = path_length(g, p.edges);
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

// Visits all 2^n subsets of `items` in plain binary-counter order.
inline void for_each_subset(const std::vector<int>& items, const std::function<void(const std::vector<int>&)>& f) {
  const std::uint64_t count = std::uint64_t{1} << items.size();
  std::vector<int> subset;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1U) subset.push_back(items[i]);
    }
    f(subset);
  }
}

}  // namespace pathattack::testing
