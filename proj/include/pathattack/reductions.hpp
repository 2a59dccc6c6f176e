#pragma once

#include <string>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"

namespace pathattack {

enum class FixtureKind { kThreeTerminal, kDirectedDoubling, kLineGraph };

std::string fixture_name(FixtureKind kind);

struct ReductionInstance {
  FixtureKind kind = FixtureKind::kThreeTerminal;
  Graph original;
  NodeSet terminals;  // (s1, s2, s3), or (s, t) of the original path
  Graph reduced;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  Path p_star;  // in the reduced graph; empty when no path was given
  // Original edge behind each reduced element (edges, or nodes for the line
  // graph); kNoEdge for elements the construction added.
  std::vector<EdgeId> origin;
  std::vector<double> node_cost;  // line graph only
};

// Adds M+1 disjoint N-hop paths s1-s2 and s2-s3 and a (2N-1)-hop path s1-s3
// that becomes p_star, with s = s1 and t = s3. Original nodes and edges keep
// their ids; every weight and cost is 1.
ReductionInstance build_three_terminal_fixture(const Graph& g, NodeId s1, NodeId s2, NodeId s3);

// Maps a cut of the fixture back to the original graph: the original edges it
// contains when it has fewer than M edges, otherwise all of E.
EdgeSet map_three_terminal_cut(const ReductionInstance& inst, const EdgeSet& reduced_cut);

// No two terminals connected once `cut` is removed.
bool terminals_separated(const Graph& g, const NodeSet& terminals, const EdgeSet& cut);

// Edge e becomes arcs 2e (u to v) and 2e+1 (v to u) with the same weight and
// cost. A nonempty p_star is carried over.
ReductionInstance build_directed_doubling(const Graph& g, const Path& p_star = {});

// Line graph of g plus s^ = M and t^ = M+1, joined to the nodes of the edges
// at s and t. Node e stands for edge e and costs c(e); every edge has weight
// and cost 1. p_star maps to s^, its edges in order, t^.
ReductionInstance build_line_graph_fixture(const Graph& g, const Path& p_star);

// Edges of the original graph behind a node set of the line-graph fixture.
EdgeSet map_line_graph_nodes(const ReductionInstance& inst, const NodeSet& nodes);

// k parallel two-edge routes between m and t, all cheaper than the shortest
// path through the target edge, which also crosses the single c_min edge s-m.
// Removing s-m leaves the detour s-w1-w2-u-v-t, which uses the target.
struct GapFixture {
  Graph graph;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  EdgeId target = kNoEdge;
  EdgeId cheap_edge = kNoEdge;
  int k = 0;
  double c_min = 0.0;
  double c_max = 0.0;
};

GapFixture build_gap_fixture(int k, double c_min, double c_max);

// Complete graph on n nodes, unit weights and costs except the edge s-t with
// weight n; p_star is that single edge. Every other s-t path must be cut.
struct CliqueFixture {
  Graph graph;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  Path p_star;
};

CliqueFixture build_clique_fixture(int n);

}  // namespace pathattack
