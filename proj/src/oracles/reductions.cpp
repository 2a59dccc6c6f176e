#include <algorithm>

#include "pathattack/errors.hpp"
#include "pathattack/reductions.hpp"

namespace pathattack {

std::string fixture_name(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::kThreeTerminal:
      return "three_terminal";
    case FixtureKind::kDirectedDoubling:
      return "directed_doubling";
    case FixtureKind::kLineGraph:
      return "line_graph";
  }
  return "unknown";
}

ReductionInstance build_three_terminal_fixture(const Graph& g, NodeId s1, NodeId s2, NodeId s3) {
  if (!g.valid_node(s1) || !g.valid_node(s2) || !g.valid_node(s3)) {
    throw InvalidParameter("terminal outside the graph");
  }
  if (s1 == s2 || s2 == s3 || s1 == s3) throw InvalidParameter("terminals must be distinct");
  const int n = g.num_nodes();
  const int m = g.num_edges();

  std::vector<EdgeSpec> specs;
  for (const Edge& e : g.edges()) specs.push_back({e.u, e.v, 1.0, 1.0});
  NodeId next = n;
  // hops-1 fresh nodes chained from `from` to `to`; returns the nodes of the
  // whole chain, endpoints included.
  auto chain = [&](NodeId from, NodeId to, int hops) {
    std::vector<NodeId> nodes{from};
    for (int j = 0; j < hops - 1; ++j) {
      specs.push_back({nodes.back(), next, 1.0, 1.0});
      nodes.push_back(next++);
    }
    specs.push_back({nodes.back(), to, 1.0, 1.0});
    nodes.push_back(to);
    return nodes;
  };
  for (int i = 0; i <= m; ++i) chain(s1, s2, n);
  for (int i = 0; i <= m; ++i) chain(s2, s3, n);
  const std::vector<NodeId> star_nodes = chain(s1, s3, 2 * n - 1);

  ReductionInstance inst;
  inst.kind = FixtureKind::kThreeTerminal;
  inst.original = g;
  inst.terminals = {s1, s2, s3};
  inst.reduced = build_graph(g.directed(), specs, next);
  inst.s = s1;
  inst.t = s3;
  inst.p_star = make_path(inst.reduced, star_nodes);
  inst.origin.assign(specs.size(), kNoEdge);
  for (EdgeId e = 0; e < m; ++e) inst.origin[e] = e;
  return inst;
}

EdgeSet map_three_terminal_cut(const ReductionInstance& inst, const EdgeSet& reduced_cut) {
  const int m = inst.original.num_edges();
  EdgeSet out;
  if (static_cast<int>(reduced_cut.size()) < m) {
    for (EdgeId e : reduced_cut) {
      if (e >= 0 && e < static_cast<EdgeId>(inst.origin.size()) && inst.origin[e] != kNoEdge) {
        out.push_back(inst.origin[e]);
      }
    }
  } else {
    for (EdgeId e = 0; e < m; ++e) out.push_back(e);
  }
  normalize(out);
  return out;
}

bool terminals_separated(const Graph& g, const NodeSet& terminals, const EdgeSet& cut) {
  const EdgeMask mask(g.num_edges(), cut);
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = 0; j < terminals.size(); ++j) {
      if (i != j && reachable(g, terminals[i], terminals[j], mask)) return false;
    }
  }
  return true;
}

ReductionInstance build_directed_doubling(const Graph& g, const Path& p_star) {
  if (g.directed()) throw InvalidParameter("doubling expects an undirected graph");
  std::vector<EdgeSpec> specs;
  ReductionInstance inst;
  inst.kind = FixtureKind::kDirectedDoubling;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    specs.push_back({ed.u, ed.v, ed.weight, ed.cost});
    specs.push_back({ed.v, ed.u, ed.weight, ed.cost});
    inst.origin.push_back(e);
    inst.origin.push_back(e);
  }
  inst.original = g;
  inst.reduced = build_graph(true, specs, g.num_nodes(), g.labels());
  if (!p_star.empty()) {
    inst.s = p_star.source();
    inst.t = p_star.target();
    inst.terminals = {inst.s, inst.t};
    inst.p_star = make_path(inst.reduced, p_star.nodes);
  }
  return inst;
}

ReductionInstance build_line_graph_fixture(const Graph& g, const Path& p_star) {
  if (g.directed()) throw InvalidParameter("line-graph fixture expects an undirected graph");
  if (!is_valid_path(g, p_star) || p_star.empty()) throw InvalidParameter("target path is not in the graph");
  const int m = g.num_edges();
  const NodeId s_hat = m;
  const NodeId t_hat = m + 1;
  const NodeId s = p_star.source();
  const NodeId t = p_star.target();

  std::vector<EdgeSpec> specs;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto arcs = g.out_arcs(v);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        specs.push_back({arcs[i].edge, arcs[j].edge, 1.0, 1.0});
      }
    }
  }
  for (const Arc& a : g.out_arcs(s)) specs.push_back({s_hat, a.edge, 1.0, 1.0});
  for (const Arc& a : g.out_arcs(t)) specs.push_back({a.edge, t_hat, 1.0, 1.0});

  ReductionInstance inst;
  inst.kind = FixtureKind::kLineGraph;
  inst.original = g;
  inst.terminals = {s, t};
  inst.reduced = build_graph(false, specs, m + 2);
  inst.s = s_hat;
  inst.t = t_hat;
  std::vector<NodeId> nodes{s_hat};
  nodes.insert(nodes.end(), p_star.edges.begin(), p_star.edges.end());
  nodes.push_back(t_hat);
  inst.p_star = make_path(inst.reduced, nodes);
  inst.origin.resize(m + 2, kNoEdge);
  inst.node_cost.assign(m + 2, 0.0);
  for (EdgeId e = 0; e < m; ++e) {
    inst.origin[e] = e;
    inst.node_cost[e] = g.cost(e);
  }
  return inst;
}

EdgeSet map_line_graph_nodes(const ReductionInstance& inst, const NodeSet& nodes) {
  EdgeSet out;
  for (NodeId n : nodes) {
    if (n >= 0 && n < static_cast<NodeId>(inst.origin.size()) && inst.origin[n] != kNoEdge) {
      out.push_back(inst.origin[n]);
    }
  }
  normalize(out);
  return out;
}

}  // namespace pathattack
