#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathattack/graph.hpp"

namespace pathattack {

// Simple path as parallel node and edge sequences. A single-node path has no
// edges and length 0.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  double length = 0.0;

  NodeId source() const { return nodes.front(); }
  NodeId target() const { return nodes.back(); }
  int hops() const { return static_cast<int>(edges.size()); }
  bool empty() const { return nodes.empty(); }
  bool uses_edge(EdgeId e) const;
  bool uses_node(NodeId n) const;

  friend bool operator==(const Path& a, const Path& b) { return a.nodes == b.nodes; }
};

// Orders by length, then node sequence.
bool path_less(const Path& a, const Path& b);

// Builds a path from a node sequence; throws InvalidParameter when a hop has
// no edge.
Path make_path(const Graph& g, std::vector<NodeId> nodes);

// Sum of edge weights in traversal order.
double path_length(const Graph& g, const std::vector<EdgeId>& edges);

// True when the path is simple, every hop is an edge of g not in `removed`,
// and the stored length matches the recomputed one to 1e-9 relative.
bool is_valid_path(const Graph& g, const Path& p, const EdgeMask& removed = {});

// Minimum-weight s-t path avoiding removed edges and nodes. Among equal-length
// paths the lexicographically smallest node sequence wins. nullopt when t is
// unreachable.
std::optional<Path> shortest_path(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed = {},
                                  const NodeMask& removed_nodes = {});

// The first k simple s-t paths ordered by (length, node sequence). Shorter
// when fewer paths exist.
std::vector<Path> k_shortest_simple_paths(const Graph& g, NodeId s, NodeId t, std::size_t k,
                                          const EdgeMask& removed = {});

// Incremental form of the above: yields one path per call.
class SimplePathEnumerator {
 public:
  SimplePathEnumerator(const Graph& g, NodeId s, NodeId t, EdgeMask removed = {});
  std::optional<Path> next();

 private:
  void add_deviations(const Path& last);

  const Graph* g_;
  NodeId s_;
  NodeId t_;
  EdgeMask removed_;
  std::vector<Path> accepted_;
  std::vector<Path> candidates_;  // heap ordered by path_less
  bool started_ = false;
};

// Shortest s-t path other than p_star (same endpoints), which may be longer
// than p_star. nullopt when p_star is the only path. p_star must be intact.
std::optional<Path> next_competing_path(const Graph& g, const Path& p_star,
                                        const EdgeMask& removed = {});

// Minimum-weight simple s-t path traversing e_star. Undirected edges are tried
// in both orientations and the shorter result kept. nullopt when no such path
// exists.
std::optional<Path> shortest_path_via_edge(const Graph& g, NodeId s, NodeId t, EdgeId e_star,
                                           const EdgeMask& removed = {});

// Minimum-weight simple s-t path visiting v_star.
std::optional<Path> shortest_path_via_node(const Graph& g, NodeId s, NodeId t, NodeId v_star,
                                           const EdgeMask& removed = {});

}  // namespace pathattack
