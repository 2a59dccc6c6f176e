// Shortest simple paths through a waypoint. The path splits into a head
// s -> a and a tail b -> t that must be node-disjoint. When the two
// independent shortest halves collide, the search branches on the first
// shared node (it leaves the head or it leaves the tail) and explores the
// branches best-first, which keeps the result exact.
#include <algorithm>
#include <queue>
#include <set>

#include "pathattack/errors.hpp"
#include "pathattack/paths.hpp"

namespace pathattack {
namespace {

constexpr std::size_t kMaxStates = 200000;

struct Halves {
  Path head;
  Path tail;
  double bound = 0.0;
  std::vector<NodeId> sequence;  // concatenated node sequence, for ordering
  NodeSet head_excluded;
  NodeSet tail_excluded;
};

std::optional<Path> half(const Graph& g, NodeId from, NodeId to, const EdgeMask& removed,
                         const NodeSet& excluded) {
  return shortest_path(g, from, to, removed, NodeMask(g.num_nodes(), excluded));
}

std::optional<Halves> evaluate(const Graph& g, NodeId s, NodeId a, NodeId b, NodeId t, double bridge,
                               const EdgeMask& removed, NodeSet head_ex, NodeSet tail_ex) {
  auto head = half(g, s, a, removed, head_ex);
  if (!head) return std::nullopt;
  auto tail = half(g, b, t, removed, tail_ex);
  if (!tail) return std::nullopt;
  Halves h;
  h.bound = head->length + bridge + tail->length;
  h.sequence = head->nodes;
  // A node waypoint appears as both the head's end and the tail's start.
  h.sequence.insert(h.sequence.end(), tail->nodes.begin() + (a == b ? 1 : 0), tail->nodes.end());
  h.head = std::move(*head);
  h.tail = std::move(*tail);
  h.head_excluded = std::move(head_ex);
  h.tail_excluded = std::move(tail_ex);
  return h;
}

// First node other than the joint that both halves visit.
NodeId first_conflict(const Halves& h, NodeId a, NodeId b) {
  std::vector<NodeId> tail_nodes = h.tail.nodes;
  std::sort(tail_nodes.begin(), tail_nodes.end());
  for (NodeId n : h.head.nodes) {
    if (a == b && n == a) continue;
    if (std::binary_search(tail_nodes.begin(), tail_nodes.end(), n)) return n;
  }
  return kNoNode;
}

std::optional<Path> search(const Graph& g, NodeId s, NodeId t, NodeId a, NodeId b, EdgeId bridge_edge,
                           const EdgeMask& removed) {
  const double bridge = bridge_edge == kNoEdge ? 0.0 : g.weight(bridge_edge);
  // Each half must stay off the other half's fixed endpoints.
  NodeSet head_ex{t};
  NodeSet tail_ex{s};
  if (a != b) {
    head_ex.push_back(b);
    tail_ex.push_back(a);
  }
  normalize(head_ex);
  normalize(tail_ex);

  auto cmp = [](const Halves& x, const Halves& y) {
    if (x.bound != y.bound) return x.bound > y.bound;
    return x.sequence > y.sequence;
  };
  std::priority_queue<Halves, std::vector<Halves>, decltype(cmp)> open(cmp);
  std::set<std::pair<NodeSet, NodeSet>> seen;
  if (auto root = evaluate(g, s, a, b, t, bridge, removed, head_ex, tail_ex)) {
    seen.insert({head_ex, tail_ex});
    open.push(std::move(*root));
  }
  while (!open.empty()) {
    Halves cur = open.top();
    open.pop();
    const NodeId x = first_conflict(cur, a, b);
    if (x == kNoNode) {
      std::vector<NodeId> nodes = cur.sequence;
      std::vector<EdgeId> edges = cur.head.edges;
      if (bridge_edge != kNoEdge) edges.push_back(bridge_edge);
      edges.insert(edges.end(), cur.tail.edges.begin(), cur.tail.edges.end());
      Path p;
      p.nodes = std::move(nodes);
      p.edges = std::move(edges);
      p.length = path_length(g, p.edges);
      return p;
    }
    for (int side = 0; side < 2; ++side) {
      NodeSet hx = cur.head_excluded;
      NodeSet tx = cur.tail_excluded;
      (side == 0 ? hx : tx).push_back(x);
      normalize(hx);
      normalize(tx);
      if (!seen.insert({hx, tx}).second) continue;
      if (seen.size() > kMaxStates) throw ResourceExhausted("waypoint path search exceeded state cap");
      if (auto child = evaluate(g, s, a, b, t, bridge, removed, std::move(hx), std::move(tx))) {
        open.push(std::move(*child));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Path> shortest_path_via_edge(const Graph& g, NodeId s, NodeId t, EdgeId e_star,
                                           const EdgeMask& removed) {
  if (!g.valid_node(s) || !g.valid_node(t) || !g.valid_edge(e_star)) {
    throw InvalidParameter("invalid terminal or target edge");
  }
  if (s == t || removed.test(e_star)) return std::nullopt;
  const Edge& e = g.edge(e_star);
  std::optional<Path> best;
  auto consider = [&](NodeId a, NodeId b) {
    if (b == s || a == t) return;
    auto p = search(g, s, t, a, b, e_star, removed);
    if (p && (!best || path_less(*p, *best))) best = std::move(p);
  };
  consider(e.u, e.v);
  if (!g.directed()) consider(e.v, e.u);
  return best;
}

std::optional<Path> shortest_path_via_node(const Graph& g, NodeId s, NodeId t, NodeId v_star,
                                           const EdgeMask& removed) {
  if (!g.valid_node(s) || !g.valid_node(t) || !g.valid_node(v_star)) {
    throw InvalidParameter("invalid terminal or target node");
  }
  if (s == t) return std::nullopt;
  if (v_star == s || v_star == t) return shortest_path(g, s, t, removed);
  return search(g, s, t, v_star, v_star, kNoEdge, removed);
}

}  // namespace pathattack
