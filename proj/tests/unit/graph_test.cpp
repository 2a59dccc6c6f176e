#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "pathattack/edge_list_io.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/generators.hpp"
#include "pathattack/graph.hpp"
#include "pathattack/incidence.hpp"
#include "pathattack/weights.hpp"

namespace pa = pathattack;

namespace {

pa::Graph triangle() {
  const std::vector<pa::EdgeSpec> e{{0, 1, 1.0, 2.0}, {1, 2, 3.0, 1.0}, {2, 0, 2.0, 5.0}};
  return pa::build_graph(false, e);
}

}  // namespace

TEST(Graph, UndirectedEdgesStoredLowFirst) {
  const pa::Graph g = triangle();
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(2).u, 0);
  EXPECT_EQ(g.edge(2).v, 2);
  EXPECT_EQ(*g.find_edge(2, 0), 2);
  EXPECT_EQ(*g.find_edge(0, 2), 2);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_DOUBLE_EQ(g.total_cost(), 8.0);
}

TEST(Graph, DirectedLookupRespectsOrientation) {
  const std::vector<pa::EdgeSpec> e{{0, 1}, {1, 0}, {1, 2}};
  const pa::Graph g = pa::build_graph(true, e);
  EXPECT_EQ(*g.find_edge(0, 1), 0);
  EXPECT_EQ(*g.find_edge(1, 0), 1);
  EXPECT_FALSE(g.find_edge(2, 1).has_value());
  EXPECT_EQ(g.out_arcs(1).size(), 2u);
  EXPECT_EQ(g.in_arcs(1).size(), 1u);
  EXPECT_EQ(g.degree(1), 3);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(pa::build_graph(false, std::vector<pa::EdgeSpec>{{0, 0}}), pa::SelfLoop);
  EXPECT_THROW(pa::build_graph(false, std::vector<pa::EdgeSpec>{{0, 1}, {1, 0}}), pa::DuplicateEdge);
  EXPECT_THROW(pa::build_graph(false, std::vector<pa::EdgeSpec>{{0, 1, -1.0}}), pa::NegativeValue);
  EXPECT_THROW(pa::build_graph(false, std::vector<pa::EdgeSpec>{{0, 1, 1.0, NAN}}), pa::NegativeValue);
  EXPECT_THROW(pa::build_graph(false, std::vector<pa::EdgeSpec>{{0, 5}}, 3), pa::InvalidParameter);
  EXPECT_NO_THROW(pa::build_graph(true, std::vector<pa::EdgeSpec>{{0, 1}, {1, 0}}));
}

TEST(Graph, LabelsAssignedInOrderOfAppearance) {
  const std::vector<pa::LabeledEdgeSpec> e{{"b", "a"}, {"a", "c", 2.0, 3.0}};
  const pa::Graph g = pa::build_graph(false, e);
  EXPECT_EQ(g.label(0), "b");
  EXPECT_EQ(*g.node_by_label("c"), 2);
  EXPECT_FALSE(g.node_by_label("zz").has_value());
}

TEST(Graph, RemoveEdgesRenumbers) {
  const pa::Graph g = triangle();
  std::vector<pa::EdgeId> map;
  const pa::Graph h = pa::remove_edges(g, {1}, &map);
  ASSERT_EQ(h.num_edges(), 2);
  EXPECT_EQ(map, (std::vector<pa::EdgeId>{0, 2}));
  EXPECT_DOUBLE_EQ(h.cost(1), 5.0);
  EXPECT_EQ(h.num_nodes(), 3);
}

TEST(Graph, InducedSubgraphKeepsInternalEdges) {
  const pa::Graph g = pa::generate(pa::GraphModel::complete(5), 0);
  std::vector<pa::EdgeId> map;
  const std::vector<pa::NodeId> nodes{4, 1, 2};
  const pa::Graph h = pa::induced_subgraph(g, nodes, &map);
  EXPECT_EQ(h.num_nodes(), 3);
  EXPECT_EQ(h.num_edges(), 3);
  for (pa::EdgeId e = 0; e < h.num_edges(); ++e) {
    const pa::Edge& orig = g.edge(map[e]);
    const pa::NodeId a = nodes[h.edge(e).u];
    const pa::NodeId b = nodes[h.edge(e).v];
    EXPECT_TRUE((orig.u == a && orig.v == b) || (orig.u == b && orig.v == a));
  }
}

TEST(Graph, HopDistancesAndReachability) {
  const pa::Graph g = pa::generate(pa::GraphModel::lattice(3, 4), 0);
  const auto d = pa::hop_distances(g, 0);
  EXPECT_EQ(d[11], 5);
  pa::EdgeMask removed(g.num_edges());
  for (const pa::Arc& a : g.out_arcs(0)) removed.set(a.edge);
  EXPECT_FALSE(pa::reachable(g, 0, 11, removed));
  EXPECT_EQ(pa::hop_distances(g, 0, removed)[11], -1);
  pa::NodeMask gone(g.num_nodes());
  gone.set(1);
  gone.set(4);
  EXPECT_FALSE(pa::reachable(g, 0, 11, {}, gone));
}

TEST(Incidence, TriangleHasTwoNonzerosPerColumn) {
  const pa::IncidenceMatrix a = pa::incidence(triangle());
  ASSERT_EQ(a.rows(), 3);
  ASSERT_EQ(a.cols(), 3);
  // Hand-enumerated: columns (0,1), (1,2), (0,2) with the lower id as tail.
  const std::vector<std::int8_t> want{-1, 0, -1,  //
                                      1, -1, 0,   //
                                      0, 1, 1};
  EXPECT_EQ(a.dense(), want);
  for (int c = 0; c < 3; ++c) {
    int nonzero = 0;
    int sum = 0;
    for (int r = 0; r < 3; ++r) {
      nonzero += a.abs_entry(r, c);
      sum += a.entry(r, c);
    }
    EXPECT_EQ(nonzero, 2);
    EXPECT_EQ(sum, 0);
  }
  EXPECT_THROW(pa::incidence(pa::Graph{}), pa::EmptyGraph);
}

TEST(Generators, PublishedSizes) {
  const pa::Graph comp = pa::generate(pa::GraphModel::complete(565), 1);
  EXPECT_EQ(comp.num_nodes(), 565);
  EXPECT_EQ(comp.num_edges(), 159330);
  const pa::Graph lat = pa::generate(pa::GraphModel::lattice(285, 285), 1);
  EXPECT_EQ(lat.num_nodes(), 81225);
  EXPECT_EQ(lat.num_edges(), 161880);
}

TEST(Generators, DeterministicPerSeed) {
  for (const pa::GraphModel& m : {pa::GraphModel::er(60, 0.1), pa::GraphModel::ba(60, 2),
                                  pa::GraphModel::ws(60, 4, 0.2), pa::GraphModel::kron(6),
                                  pa::GraphModel::der(40, 0.1)}) {
    const pa::Graph a = pa::generate(m, 7);
    const pa::Graph b = pa::generate(m, 7);
    EXPECT_EQ(pa::format_edge_list(a), pa::format_edge_list(b)) << m.name();
    EXPECT_EQ(a.directed(), m.directed());
  }
  EXPECT_NE(pa::format_edge_list(pa::generate(pa::GraphModel::er(60, 0.1), 7)),
            pa::format_edge_list(pa::generate(pa::GraphModel::er(60, 0.1), 8)));
}

TEST(Generators, ModelShapes) {
  const pa::Graph ba = pa::generate(pa::GraphModel::ba(100, 3), 2);
  EXPECT_EQ(ba.num_nodes(), 100);
  EXPECT_GE(ba.num_edges(), 3 * (100 - 4));
  const pa::Graph ws = pa::generate(pa::GraphModel::ws(50, 4, 0.0), 2);
  EXPECT_EQ(ws.num_edges(), 100);
  for (pa::NodeId v = 0; v < 50; ++v) EXPECT_EQ(ws.degree(v), 4);
  EXPECT_THROW(pa::generate(pa::GraphModel::ws(10, 3, 0.1), 0), pa::InvalidParameter);
  EXPECT_THROW(pa::parse_model_kind("nope"), pa::InvalidParameter);
}

TEST(Weights, SampleMeansMatchOffsetRate) {
  const pa::Graph g = pa::generate(pa::GraphModel::complete(448), 0);
  ASSERT_GE(g.num_edges(), 100000);
  auto mean = [&](const pa::Graph& h) {
    double sum = 0.0;
    for (const pa::Edge& e : h.edges()) sum += e.weight;
    return sum / h.num_edges();
  };
  const pa::Graph p = pa::assign_weights(g, pa::WeightScheme::poisson(20.0, 11));
  EXPECT_NEAR(mean(p), 21.0, 0.1);
  const pa::Graph u = pa::assign_weights(g, pa::WeightScheme::uniform(1, 41, 11));
  EXPECT_NEAR(mean(u), 21.0, 0.2);
  for (const pa::Edge& e : u.edges()) {
    ASSERT_GE(e.weight, 1.0);
    ASSERT_LE(e.weight, 41.0);
    ASSERT_EQ(e.weight, std::floor(e.weight));
    ASSERT_EQ(e.cost, e.weight);
  }
  for (const pa::Edge& e : p.edges()) ASSERT_GE(e.weight, 1.0);
}

TEST(Weights, ParseAndCostRules) {
  EXPECT_EQ(pa::WeightScheme::parse("uniform:2:9", 0).to_string(), "uniform:2:9");
  EXPECT_EQ(pa::WeightScheme::parse("poisson:20", 0).to_string(), "poisson:20");
  EXPECT_EQ(pa::WeightScheme::parse("equal", 0).to_string(), "equal");
  EXPECT_THROW(pa::WeightScheme::parse("gauss", 0), pa::InvalidParameter);
  const pa::Graph g = pa::generate(pa::GraphModel::er(30, 0.3), 1);
  const pa::Graph unit = pa::assign_weights(g, pa::WeightScheme::uniform(1, 41, 3), pa::CostRule::kUnit);
  for (const pa::Edge& e : unit.edges()) EXPECT_EQ(e.cost, 1.0);
}

TEST(EdgeListIo, RoundTripsBothFormats) {
  const pa::Graph g = pa::assign_weights(pa::generate(pa::GraphModel::er(25, 0.2), 3),
                                         pa::WeightScheme::poisson(20.0, 4), pa::CostRule::kUnit);
  for (auto fmt : {pa::EdgeListFormat::kWhitespace, pa::EdgeListFormat::kCsv}) {
    const std::string text = pa::format_edge_list(g, fmt);
    const pa::Graph h = pa::parse_edge_list(text, fmt);
    ASSERT_EQ(h.num_edges(), g.num_edges());
    EXPECT_EQ(h.num_nodes(), g.num_nodes());
    EXPECT_EQ(pa::format_edge_list(h, fmt), text);
  }
  const auto dir = std::filesystem::temp_directory_path() / "pathattack_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "g.csv").string();
  pa::save_edge_list(g, path, pa::format_for_path(path));
  EXPECT_EQ(pa::format_edge_list(pa::load_edge_list(path, pa::EdgeListFormat::kCsv)),
            pa::format_edge_list(g));
}

TEST(EdgeListIo, DefaultsAndErrors) {
  const pa::Graph g = pa::parse_edge_list("# comment\na b\nb c 2.5\nc d 3 7\n");
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.weight(0), 1.0);
  EXPECT_EQ(g.cost(1), 2.5);
  EXPECT_EQ(g.cost(2), 7.0);
  try {
    pa::parse_edge_list("a b\nb c x\n");
    FAIL();
  } catch (const pa::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(pa::parse_edge_list("a b -1\n"), pa::ParseError);
  EXPECT_THROW(pa::load_edge_list("/nonexistent/file.txt"), pa::IoError);
}
