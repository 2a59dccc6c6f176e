#include "pathattack/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

#include "pathattack/errors.hpp"

namespace pathattack {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EdgeMask sized_copy(const EdgeMask& base, int num_edges) {
  return EdgeMask(num_edges, base.to_set());
}

// Distances to t over reversed arcs. Stops once every node no farther than s
// is settled, which is all the greedy walk from s can touch.
std::vector<double> distances_to(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed,
                                 const NodeMask& removed_nodes, std::vector<NodeId>& next_hop) {
  std::vector<double> dist(g.num_nodes(), kInf);
  std::vector<std::uint8_t> done(g.num_nodes(), 0);
  next_hop.assign(g.num_nodes(), kNoNode);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[t] = 0.0;
  heap.push({0.0, t});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    if (d > dist[s]) break;
    done[u] = 1;
    for (const Arc& a : g.in_arcs(u)) {
      const NodeId v = a.head;
      if (removed.test(a.edge) || removed_nodes.test(v) || done[v]) continue;
      const double nd = g.weight(a.edge) + d;
      if (nd < dist[v]) {
        dist[v] = nd;
        next_hop[v] = u;
        heap.push({nd, v});
      }
    }
  }
  // Anything left unsettled is farther than s and must not look tight.
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!done[v]) dist[v] = kInf;
  }
  return dist;
}

Path with_length(const Graph& g, std::vector<NodeId> nodes, std::vector<EdgeId> edges) {
  Path p;
  p.nodes = std::move(nodes);
  p.edges = std::move(edges);
  p.length = path_length(g, p.edges);
  return p;
}

}  // namespace

bool Path::uses_edge(EdgeId e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

bool Path::uses_node(NodeId n) const { return std::find(nodes.begin(), nodes.end(), n) != nodes.end(); }

bool path_less(const Path& a, const Path& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.nodes < b.nodes;
}

double path_length(const Graph& g, const std::vector<EdgeId>& edges) {
  double sum = 0.0;
  for (EdgeId e : edges) sum += g.weight(e);
  return sum;
}

Path make_path(const Graph& g, std::vector<NodeId> nodes) {
  if (nodes.empty()) throw InvalidParameter("empty path");
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!g.valid_node(nodes[i]) || !g.valid_node(nodes[i + 1])) throw InvalidParameter("invalid node in path");
    auto e = g.find_edge(nodes[i], nodes[i + 1]);
    if (!e) {
      throw InvalidParameter("no edge " + g.label(nodes[i]) + " -> " + g.label(nodes[i + 1]));
    }
    edges.push_back(*e);
  }
  return with_length(g, std::move(nodes), std::move(edges));
}

bool is_valid_path(const Graph& g, const Path& p, const EdgeMask& removed) {
  if (p.nodes.empty() || p.edges.size() + 1 != p.nodes.size()) return false;
  std::vector<NodeId> sorted = p.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (!g.valid_edge(e) || removed.test(e)) return false;
    if (g.find_edge(p.nodes[i], p.nodes[i + 1]) != std::optional<EdgeId>(e)) return false;
  }
  const double recomputed = path_length(g, p.edges);
  return std::abs(recomputed - p.length) <= 1e-9 * std::max(1.0, std::abs(recomputed));
}

std::optional<Path> shortest_path(const Graph& g, NodeId s, NodeId t, const EdgeMask& removed,
                                  const NodeMask& removed_nodes) {
  if (!g.valid_node(s) || !g.valid_node(t)) throw InvalidParameter("invalid terminal");
  if (removed_nodes.test(s) || removed_nodes.test(t)) return std::nullopt;
  if (s == t) return Path{{s}, {}, 0.0};
  std::vector<NodeId> next_hop;
  const auto dist = distances_to(g, s, t, removed, removed_nodes, next_hop);
  if (dist[s] == kInf) return std::nullopt;

  // Greedy walk along tight arcs, smallest head first, gives the
  // lexicographically smallest shortest path.
  std::vector<NodeId> nodes{s};
  std::vector<EdgeId> edges;
  std::vector<std::uint8_t> visited(g.num_nodes(), 0);
  visited[s] = 1;
  NodeId u = s;
  while (u != t) {
    NodeId chosen = kNoNode;
    EdgeId via = kNoEdge;
    for (const Arc& a : g.out_arcs(u)) {
      if (removed.test(a.edge) || removed_nodes.test(a.head) || visited[a.head]) continue;
      if (dist[a.head] == kInf) continue;
      if (g.weight(a.edge) + dist[a.head] == dist[u]) {
        chosen = a.head;
        via = a.edge;
        break;
      }
    }
    if (chosen == kNoNode) break;
    nodes.push_back(chosen);
    edges.push_back(via);
    visited[chosen] = 1;
    u = chosen;
  }
  if (u != t) {
    // Zero-weight cycles can strand the walk; the shortest-path tree is
    // always simple.
    nodes.assign(1, s);
    edges.clear();
    for (NodeId v = s; v != t; v = next_hop[v]) {
      nodes.push_back(next_hop[v]);
      edges.push_back(*g.find_edge(v, next_hop[v]));
    }
  }
  return with_length(g, std::move(nodes), std::move(edges));
}

SimplePathEnumerator::SimplePathEnumerator(const Graph& g, NodeId s, NodeId t, EdgeMask removed)
    : g_(&g), s_(s), t_(t), removed_(std::move(removed)) {}

void SimplePathEnumerator::add_deviations(const Path& last) {
  auto heap_cmp = [](const Path& a, const Path& b) { return path_less(b, a); };
  for (std::size_t i = 0; i < last.edges.size(); ++i) {
    const NodeId spur = last.nodes[i];
    EdgeMask edges = sized_copy(removed_, g_->num_edges());
    NodeMask nodes(g_->num_nodes());
    for (std::size_t j = 0; j < i; ++j) nodes.set(last.nodes[j]);
    for (const Path& a : accepted_) {
      if (a.edges.size() > i && std::equal(a.nodes.begin(), a.nodes.begin() + i + 1, last.nodes.begin())) {
        edges.set(a.edges[i]);
      }
    }
    auto tail = shortest_path(*g_, spur, t_, edges, nodes);
    if (!tail) continue;
    std::vector<NodeId> seq(last.nodes.begin(), last.nodes.begin() + i);
    std::vector<EdgeId> eseq(last.edges.begin(), last.edges.begin() + i);
    seq.insert(seq.end(), tail->nodes.begin(), tail->nodes.end());
    eseq.insert(eseq.end(), tail->edges.begin(), tail->edges.end());
    Path cand = with_length(*g_, std::move(seq), std::move(eseq));
    const bool known = std::any_of(candidates_.begin(), candidates_.end(),
                                   [&](const Path& c) { return c == cand; });
    if (known) continue;
    candidates_.push_back(std::move(cand));
    std::push_heap(candidates_.begin(), candidates_.end(), heap_cmp);
  }
}

std::optional<Path> SimplePathEnumerator::next() {
  auto heap_cmp = [](const Path& a, const Path& b) { return path_less(b, a); };
  if (!started_) {
    started_ = true;
    auto first = shortest_path(*g_, s_, t_, removed_);
    if (!first) return std::nullopt;
    accepted_.push_back(*first);
    return first;
  }
  if (accepted_.empty()) return std::nullopt;
  add_deviations(accepted_.back());
  if (candidates_.empty()) return std::nullopt;
  std::pop_heap(candidates_.begin(), candidates_.end(), heap_cmp);
  Path best = std::move(candidates_.back());
  candidates_.pop_back();
  accepted_.push_back(best);
  return best;
}

std::vector<Path> k_shortest_simple_paths(const Graph& g, NodeId s, NodeId t, std::size_t k,
                                          const EdgeMask& removed) {
  if (k == 0) throw InvalidParameter("k must be at least 1");
  std::vector<Path> out;
  if (s == t) return out;
  SimplePathEnumerator it(g, s, t, removed);
  while (out.size() < k) {
    auto p = it.next();
    if (!p) break;
    out.push_back(std::move(*p));
  }
  return out;
}

std::optional<Path> next_competing_path(const Graph& g, const Path& p_star, const EdgeMask& removed) {
  const NodeId s = p_star.source();
  const NodeId t = p_star.target();
  auto first = shortest_path(g, s, t, removed);
  if (!first) return std::nullopt;
  if (!(*first == p_star)) return first;
  // p_star is the shortest path: the runner-up is the best deviation from it.
  std::optional<Path> best;
  for (std::size_t i = 0; i < p_star.edges.size(); ++i) {
    EdgeMask edges = sized_copy(removed, g.num_edges());
    edges.set(p_star.edges[i]);
    NodeMask nodes(g.num_nodes());
    for (std::size_t j = 0; j < i; ++j) nodes.set(p_star.nodes[j]);
    auto tail = shortest_path(g, p_star.nodes[i], t, edges, nodes);
    if (!tail) continue;
    std::vector<NodeId> seq(p_star.nodes.begin(), p_star.nodes.begin() + i);
    std::vector<EdgeId> eseq(p_star.edges.begin(), p_star.edges.begin() + i);
    seq.insert(seq.end(), tail->nodes.begin(), tail->nodes.end());
    eseq.insert(eseq.end(), tail->edges.begin(), tail->edges.end());
    Path cand = with_length(g, std::move(seq), std::move(eseq));
    if (!best || path_less(cand, *best)) best = std::move(cand);
  }
  return best;
}

}  // namespace pathattack
