#include "pathattack/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "pathattack/errors.hpp"

namespace pathattack {

void normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains(const EdgeSet& edges, EdgeId e) {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Graph build_graph(bool directed, std::span<const EdgeSpec> edges, int num_nodes,
                  std::vector<std::string> labels) {
  Graph g;
  g.directed_ = directed;
  int inferred = 0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0) throw InvalidParameter("negative node id");
    inferred = std::max({inferred, e.u + 1, e.v + 1});
  }
  if (num_nodes < 0) {
    num_nodes = std::max(inferred, static_cast<int>(labels.size()));
  } else if (inferred > num_nodes) {
    throw InvalidParameter("edge endpoint outside node range");
  }
  g.num_nodes_ = num_nodes;
  g.edges_.reserve(edges.size());
  g.lookup_.reserve(edges.size() * 2);
  for (const auto& spec : edges) {
    if (spec.u == spec.v) throw SelfLoop("self-loop at node " + std::to_string(spec.u));
    if (!(spec.weight >= 0.0) || !(spec.cost >= 0.0) || !std::isfinite(spec.weight) ||
        !std::isfinite(spec.cost)) {
      throw NegativeValue("edge (" + std::to_string(spec.u) + "," + std::to_string(spec.v) +
                          ") has a negative or non-finite weight/cost");
    }
    NodeId u = spec.u;
    NodeId v = spec.v;
    if (!directed && u > v) std::swap(u, v);
    const auto id = static_cast<EdgeId>(g.edges_.size());
    if (!g.lookup_.emplace(Graph::key(u, v), id).second) {
      throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.edges_.push_back({u, v, spec.weight, spec.cost});
  }
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != num_nodes) {
      throw InvalidParameter("label count does not match node count");
    }
    g.labels_ = std::move(labels);
    for (NodeId n = 0; n < num_nodes; ++n) g.label_index_.emplace(g.labels_[n], n);
  }
  g.index();
  return g;
}

Graph build_graph(bool directed, std::span<const LabeledEdgeSpec> edges) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& e : edges) {
    const NodeId u = id_of(e.u);
    const NodeId v = id_of(e.v);
    specs.push_back({u, v, e.weight, e.cost});
  }
  const int n = static_cast<int>(labels.size());
  return build_graph(directed, specs, n, std::move(labels));
}

void Graph::index() {
  std::vector<int> out_count(num_nodes_ + 1, 0);
  std::vector<int> in_count(num_nodes_ + 1, 0);
  for (const auto& e : edges_) {
    ++out_count[e.u + 1];
    ++in_count[e.v + 1];
    if (!directed_) {
      ++out_count[e.v + 1];
      ++in_count[e.u + 1];
    }
  }
  std::partial_sum(out_count.begin(), out_count.end(), out_count.begin());
  std::partial_sum(in_count.begin(), in_count.end(), in_count.begin());
  out_offset_ = out_count;
  in_offset_ = in_count;
  out_arcs_.assign(out_offset_.back(), Arc{kNoNode, kNoEdge});
  in_arcs_.assign(in_offset_.back(), Arc{kNoNode, kNoEdge});
  std::vector<int> out_fill(out_offset_.begin(), out_offset_.end() - 1);
  std::vector<int> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const auto& e = edges_[id];
    out_arcs_[out_fill[e.u]++] = {e.v, id};
    in_arcs_[in_fill[e.v]++] = {e.u, id};
    if (!directed_) {
      out_arcs_[out_fill[e.v]++] = {e.u, id};
      in_arcs_[in_fill[e.u]++] = {e.v, id};
    }
  }
  // Neighbour order by node id keeps every traversal deterministic and
  // independent of insertion order.
  auto by_head = [](const Arc& a, const Arc& b) {
    return a.head != b.head ? a.head < b.head : a.edge < b.edge;
  };
  for (NodeId n = 0; n < num_nodes_; ++n) {
    std::sort(out_arcs_.begin() + out_offset_[n], out_arcs_.begin() + out_offset_[n + 1], by_head);
    std::sort(in_arcs_.begin() + in_offset_[n], in_arcs_.begin() + in_offset_[n + 1], by_head);
  }
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (!directed_ && u > v) std::swap(u, v);
  auto it = lookup_.find(key(u, v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Graph::degree(NodeId n) const {
  if (directed_) {
    return (out_offset_[n + 1] - out_offset_[n]) + (in_offset_[n + 1] - in_offset_[n]);
  }
  return out_offset_[n + 1] - out_offset_[n];
}

std::string Graph::label(NodeId n) const {
  if (labels_.empty()) return std::to_string(n);
  return labels_[n];
}

std::optional<NodeId> Graph::node_by_label(const std::string& label) const {
  if (labels_.empty()) {
    try {
      std::size_t pos = 0;
      const int n = std::stoi(label, &pos);
      if (pos == label.size() && valid_node(n)) return n;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

double Graph::total_cost() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.cost;
  return sum;
}

Graph Graph::with_values(std::span<const double> weights, std::span<const double> costs) const {
  if (weights.size() != edges_.size() || costs.size() != edges_.size()) {
    throw InvalidParameter("value vector length does not match edge count");
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    specs.push_back({edges_[i].u, edges_[i].v, weights[i], costs[i]});
  }
  return build_graph(directed_, specs, num_nodes_, labels_);
}

EdgeMask::EdgeMask(int num_edges, std::span<const EdgeId> edges) : EdgeMask(num_edges) {
  for (EdgeId e : edges) set(e);
}

void EdgeMask::set(EdgeId e, bool on) { bits_.at(static_cast<std::size_t>(e)) = on ? 1 : 0; }

bool EdgeMask::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}

EdgeSet EdgeMask::to_set() const {
  EdgeSet out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

NodeMask::NodeMask(int num_nodes, std::span<const NodeId> nodes) : NodeMask(num_nodes) {
  for (NodeId n : nodes) set(n);
}

void NodeMask::set(NodeId n, bool on) { bits_.at(static_cast<std::size_t>(n)) = on ? 1 : 0; }

double total_cost(const Graph& g, const EdgeSet& edges) {
  double sum = 0.0;
  for (EdgeId e : edges) sum += g.cost(e);
  return sum;
}

Graph remove_edges(const Graph& g, const EdgeSet& removed, std::vector<EdgeId>* new_to_old) {
  const EdgeMask mask(g.num_edges(), removed);
  std::vector<EdgeSpec> specs;
  std::vector<EdgeId> map;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (mask.test(e)) continue;
    const auto& ed = g.edge(e);
    specs.push_back({ed.u, ed.v, ed.weight, ed.cost});
    map.push_back(e);
  }
  if (new_to_old) *new_to_old = std::move(map);
  return build_graph(g.directed(), specs, g.num_nodes(), g.labels());
}

std::vector<int> hop_distances(const Graph& g, NodeId s, const EdgeMask& removed) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const NodeId n = queue.front();
    queue.pop_front();
    for (const Arc& a : g.out_arcs(n)) {
      if (removed.test(a.edge) || dist[a.head] >= 0) continue;
      dist[a.head] = dist[n] + 1;
      queue.push_back(a.head);
    }
  }
  return dist;
}

bool reachable(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed,
               const NodeMask& removed_nodes) {
  if (removed_nodes.test(s) || removed_nodes.test(t)) return false;
  std::vector<std::uint8_t> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (n == t) return true;
    for (const Arc& a : g.out_arcs(n)) {
      if (removed.test(a.edge) || removed_nodes.test(a.head) || seen[a.head]) continue;
      seen[a.head] = 1;
      stack.push_back(a.head);
    }
  }
  return false;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes, std::vector<EdgeId>* edge_map) {
  std::vector<NodeId> local(g.num_nodes(), kNoNode);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<EdgeSpec> specs;
  std::vector<EdgeId> map;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (local[ed.u] == kNoNode || local[ed.v] == kNoNode) continue;
    specs.push_back({local[ed.u], local[ed.v], ed.weight, ed.cost});
    map.push_back(e);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (NodeId n : nodes) labels.push_back(g.label(n));
  }
  if (edge_map) *edge_map = std::move(map);
  return build_graph(g.directed(), specs, static_cast<int>(nodes.size()), std::move(labels));
}

}  // namespace pathattack
