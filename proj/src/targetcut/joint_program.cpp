#include <algorithm>
#include <cmath>

#include "pathattack/branch_and_bound.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/target_cut.hpp"

namespace pathattack {
namespace {

// Variables of one orientation of the joint program.
struct Layout {
  struct ArcVar {
    int var;
    int path;  // 0: s -> a, 1: b -> t
    NodeId from;
    NodeId to;
    EdgeId edge;
  };
  std::vector<ArcVar> arcs;
  std::vector<int> delta;  // per edge, -1 when absent
};

LinearProgram build(const JointProgram& jp, NodeId a, NodeId b, EdgeId bridge, Layout& layout) {
  const Graph& g = *jp.graph;
  const EdgeMask removed(g.num_edges(), jp.removed);
  LinearProgram lp;
  const bool need_head = jp.s != a;
  const bool need_tail = b != jp.t;

  for (int path = 0; path < 2; ++path) {
    if ((path == 0 && !need_head) || (path == 1 && !need_tail)) continue;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (removed.test(e) || e == bridge) continue;
      const Edge& ed = g.edge(e);
      const int dirs = g.directed() ? 1 : 2;
      for (int d = 0; d < dirs; ++d) {
        const NodeId from = d == 0 ? ed.u : ed.v;
        const NodeId to = d == 0 ? ed.v : ed.u;
        const int var = lp.add_var(ed.weight, 0.0, 1.0, true);
        layout.arcs.push_back({var, path, from, to, e});
      }
    }
  }
  layout.delta.assign(g.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (removed.test(e)) continue;
    const double hi = e == bridge ? 0.0 : 1.0;
    layout.delta[e] = lp.add_var(0.0, 0.0, hi, true, "d" + std::to_string(e));
  }

  const int n = g.num_nodes();
  // Flow conservation per path: out - in = +1 at the start, -1 at the end.
  for (int path = 0; path < 2; ++path) {
    if ((path == 0 && !need_head) || (path == 1 && !need_tail)) continue;
    const NodeId from = path == 0 ? jp.s : b;
    const NodeId to = path == 0 ? a : jp.t;
    std::vector<std::vector<std::pair<int, double>>> rows(n);
    for (const auto& arc : layout.arcs) {
      if (arc.path != path) continue;
      rows[arc.from].emplace_back(arc.var, 1.0);
      rows[arc.to].emplace_back(arc.var, -1.0);
    }
    for (NodeId v = 0; v < n; ++v) {
      const double rhs = v == from ? 1.0 : v == to ? -1.0 : 0.0;
      if (rows[v].empty() && rhs == 0.0) continue;
      lp.add_eq(std::move(rows[v]), rhs);
    }
  }
  // Node degree over both paths: endpoints at most 1, everything else 2.
  {
    std::vector<std::vector<std::pair<int, double>>> rows(n);
    for (const auto& arc : layout.arcs) {
      rows[arc.from].emplace_back(arc.var, 1.0);
      rows[arc.to].emplace_back(arc.var, 1.0);
    }
    for (NodeId v = 0; v < n; ++v) {
      if (rows[v].empty()) continue;
      const bool end = v == jp.s || v == jp.t || (a != b && (v == a || v == b));
      lp.add_le(std::move(rows[v]), end ? 1.0 : 2.0);
    }
  }
  // A chosen edge cannot be cut.
  {
    std::vector<std::vector<std::pair<int, double>>> rows(g.num_edges());
    for (const auto& arc : layout.arcs) rows[arc.edge].emplace_back(arc.var, 1.0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rows[e].empty() || layout.delta[e] < 0) continue;
      rows[e].emplace_back(layout.delta[e], 1.0);
      lp.add_le(std::move(rows[e]), 1.0);
    }
  }
  {
    std::vector<std::pair<int, double>> budget;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (layout.delta[e] >= 0 && g.cost(e) != 0.0) budget.emplace_back(layout.delta[e], g.cost(e));
    }
    lp.add_le(std::move(budget), jp.budget);
  }
  for (const Path& q : jp.cover_paths) {
    std::vector<std::pair<int, double>> row;
    for (EdgeId e : q.edges) {
      if (layout.delta[e] >= 0) row.emplace_back(layout.delta[e], 1.0);
    }
    // An empty row is unsatisfiable; keep it so the solver reports that.
    lp.add_ge(std::move(row), 1.0);
  }
  return lp;
}

std::vector<NodeId> follow(const Layout& layout, const std::vector<double>& x, int path, NodeId from,
                           NodeId to, std::vector<EdgeId>& edges) {
  std::vector<NodeId> nodes{from};
  NodeId cur = from;
  std::size_t guard = 0;
  while (cur != to) {
    bool moved = false;
    for (const auto& arc : layout.arcs) {
      if (arc.path == path && arc.from == cur && x[arc.var] > 0.5 &&
          std::find(nodes.begin(), nodes.end(), arc.to) == nodes.end()) {
        nodes.push_back(arc.to);
        edges.push_back(arc.edge);
        cur = arc.to;
        moved = true;
        break;
      }
    }
    if (!moved || ++guard > layout.arcs.size()) {
      throw NumericalInstability("joint program returned a broken path indicator");
    }
  }
  return nodes;
}

EdgeSet prune(const Graph& g, EdgeSet cut, const std::vector<Path>& rows) {
  std::vector<EdgeId> order = cut;
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
    if (g.cost(x) != g.cost(y)) return g.cost(x) > g.cost(y);
    return x > y;
  });
  for (EdgeId e : order) {
    EdgeSet trial;
    for (EdgeId f : cut) {
      if (f != e) trial.push_back(f);
    }
    const bool covers = std::all_of(rows.begin(), rows.end(), [&](const Path& q) {
      return std::any_of(q.edges.begin(), q.edges.end(), [&](EdgeId f) { return contains(trial, f); });
    });
    if (covers) cut = std::move(trial);
  }
  return cut;
}

}  // namespace

EdgeSet target_edges(const Graph& g, const Target& target) {
  if (target.is_edge()) return {target.id};
  return incident_edges(g, {target.id});
}

std::optional<Path> shortest_path_via(const Graph& g, NodeId s, NodeId t, const Target& target,
                                      const EdgeMask& removed) {
  if (target.is_edge()) return shortest_path_via_edge(g, s, t, target.id, removed);
  return shortest_path_via_node(g, s, t, target.id, removed);
}

bool path_uses_target(const Path& p, const Target& target) {
  return target.is_edge() ? p.uses_edge(target.id) : p.uses_node(target.id);
}

bool is_valid_target_cut(const Graph& g, NodeId s, NodeId t, const Target& target, const EdgeSet& cut) {
  if (target.is_edge() && contains(cut, target.id)) return false;
  const EdgeMask mask(g.num_edges(), cut);
  auto best = shortest_path(g, s, t, mask);
  if (!best) return false;
  EdgeSet avoid = cut;
  const EdgeSet te = target_edges(g, target);
  avoid.insert(avoid.end(), te.begin(), te.end());
  normalize(avoid);
  if (!target.is_edge() && (target.id == s || target.id == t)) return true;
  auto other = shortest_path(g, s, t, EdgeMask(g.num_edges(), avoid));
  return !other || !not_longer(other->length, best->length);
}

JointResult solve_joint_program(const JointProgram& jp, double time_limit_seconds) {
  if (jp.graph == nullptr) throw InvalidParameter("joint program without a graph");
  const Graph& g = *jp.graph;
  std::vector<std::pair<NodeId, NodeId>> orientations;
  EdgeId bridge = kNoEdge;
  if (jp.target.is_edge()) {
    bridge = jp.target.id;
    if (contains(jp.removed, bridge)) return {};
    const Edge& e = g.edge(bridge);
    orientations.emplace_back(e.u, e.v);
    if (!g.directed()) orientations.emplace_back(e.v, e.u);
  } else {
    orientations.emplace_back(jp.target.id, jp.target.id);
  }

  JointResult best;
  bool timed_out = false;
  for (auto [a, b] : orientations) {
    // The head must not start at b nor the tail end at a.
    if (a != b && (b == jp.s || a == jp.t)) continue;
    Layout layout;
    const LinearProgram lp = build(jp, a, b, bridge, layout);
    BnbOptions opt;
    opt.time_limit_seconds = time_limit_seconds;
    const BnbResult r = solve_binary(lp, opt);
    best.nodes += r.nodes;
    if (r.status == BnbStatus::kTimedOut) timed_out = true;
    if (r.values.empty()) continue;

    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes = follow(layout, r.values, 0, jp.s, a, edges);
    if (bridge != kNoEdge) {
      edges.push_back(bridge);
      nodes.push_back(b);
    }
    std::vector<EdgeId> tail_edges;
    std::vector<NodeId> tail = follow(layout, r.values, 1, b, jp.t, tail_edges);
    nodes.insert(nodes.end(), tail.begin() + 1, tail.end());
    edges.insert(edges.end(), tail_edges.begin(), tail_edges.end());
    Path p;
    p.nodes = std::move(nodes);
    p.edges = std::move(edges);
    p.length = path_length(g, p.edges);

    EdgeSet cut;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (layout.delta[e] >= 0 && r.values[layout.delta[e]] > 0.5) cut.push_back(e);
    }
    if (best.status != JointStatus::kSolved || path_less(p, best.path)) {
      best.status = JointStatus::kSolved;
      best.path = std::move(p);
      best.cut = prune(g, std::move(cut), jp.cover_paths);
    }
  }
  if (timed_out) best.status = JointStatus::kTimedOut;
  return best;
}

}  // namespace pathattack
