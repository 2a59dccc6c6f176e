#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathattack {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;
inline constexpr EdgeId kNoEdge = -1;

// Sorted, duplicate-free list of edge ids. Used for cuts and protected sets.
using EdgeSet = std::vector<EdgeId>;
using NodeSet = std::vector<NodeId>;

void normalize(EdgeSet& edges);
bool contains(const EdgeSet& edges, EdgeId e);

struct EdgeSpec {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  double weight = 1.0;
  double cost = 1.0;
};

struct LabeledEdgeSpec {
  std::string u;
  std::string v;
  double weight = 1.0;
  double cost = 1.0;
};

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
  double cost;
};

// One traversal direction of an edge, stored in the adjacency arrays.
struct Arc {
  NodeId head;
  EdgeId edge;
};

// Immutable weighted graph. Nodes are dense integers; optional string labels
// live in a side table. Undirected edges are stored once with u < v, and their
// ids follow insertion order.
class Graph {
 public:
  Graph() = default;

  bool directed() const { return directed_; }
  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  double weight(EdgeId e) const { return edges_[e].weight; }
  double cost(EdgeId e) const { return edges_[e].cost; }

  // Arcs leaving `n`. For undirected graphs this is every incident edge.
  std::span<const Arc> out_arcs(NodeId n) const {
    return {out_arcs_.data() + out_offset_[n], out_arcs_.data() + out_offset_[n + 1]};
  }
  // Arcs entering `n`, with `head` holding the tail node.
  std::span<const Arc> in_arcs(NodeId n) const {
    return {in_arcs_.data() + in_offset_[n], in_arcs_.data() + in_offset_[n + 1]};
  }

  // Edge joining u to v. Undirected lookups accept either endpoint order.
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  NodeId other_end(EdgeId e, NodeId n) const {
    return edges_[e].u == n ? edges_[e].v : edges_[e].u;
  }
  // Number of incident edges, ignoring direction.
  int degree(NodeId n) const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(NodeId n) const;
  std::optional<NodeId> node_by_label(const std::string& label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool valid_node(NodeId n) const { return n >= 0 && n < num_nodes_; }
  bool valid_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  double total_cost() const;

  // Same topology, new weights and costs.
  Graph with_values(std::span<const double> weights, std::span<const double> costs) const;

  friend Graph build_graph(bool directed, std::span<const EdgeSpec> edges, int num_nodes,
                           std::vector<std::string> labels);

 private:
  static std::uint64_t key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  void index();

  bool directed_ = false;
  int num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offset_{0};
  std::vector<Arc> out_arcs_;
  std::vector<int> in_offset_{0};
  std::vector<Arc> in_arcs_;
  std::unordered_map<std::uint64_t, EdgeId> lookup_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
};

// Builds a graph on nodes [0, num_nodes). When num_nodes is negative it is
// inferred from the largest endpoint. Throws DuplicateEdge, SelfLoop,
// NegativeValue, InvalidParameter.
Graph build_graph(bool directed, std::span<const EdgeSpec> edges, int num_nodes = -1,
                  std::vector<std::string> labels = {});

// Labels are assigned dense ids in order of first appearance.
Graph build_graph(bool directed, std::span<const LabeledEdgeSpec> edges);

// Per-edge flags for "removed" or "protected" edge sets.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(int num_edges) : bits_(static_cast<std::size_t>(num_edges), 0) {}
  EdgeMask(int num_edges, std::span<const EdgeId> edges);

  bool test(EdgeId e) const { return !bits_.empty() && bits_[static_cast<std::size_t>(e)] != 0; }
  void set(EdgeId e, bool on = true);
  bool empty() const;
  EdgeSet to_set() const;

 private:
  std::vector<std::uint8_t> bits_;
};

class NodeMask {
 public:
  NodeMask() = default;
  explicit NodeMask(int num_nodes) : bits_(static_cast<std::size_t>(num_nodes), 0) {}
  NodeMask(int num_nodes, std::span<const NodeId> nodes);

  bool test(NodeId n) const { return !bits_.empty() && bits_[static_cast<std::size_t>(n)] != 0; }
  void set(NodeId n, bool on = true);

 private:
  std::vector<std::uint8_t> bits_;
};

double total_cost(const Graph& g, const EdgeSet& edges);

// Graph with the given edges deleted. Edge ids are renumbered densely; the
// returned vector maps new ids to old ids.
Graph remove_edges(const Graph& g, const EdgeSet& removed, std::vector<EdgeId>* new_to_old = nullptr);

// BFS hop distance from s to every node along edge direction; -1 when
// unreachable.
std::vector<int> hop_distances(const Graph& g, NodeId s, const EdgeMask& removed = {});

bool reachable(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed = {},
               const NodeMask& removed_nodes = {});

// Induced subgraph on `nodes`. Node ids are renumbered in the given order;
// `edge_map` receives the original id of each kept edge.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes,
                       std::vector<EdgeId>* edge_map = nullptr);

}  // namespace pathattack
