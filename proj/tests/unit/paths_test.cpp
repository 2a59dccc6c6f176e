#include <gtest/gtest.h>

#include <set>

#include "enumerate.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/generators.hpp"
#include "pathattack/paths.hpp"
#include "pathattack/weights.hpp"

namespace pa = pathattack;
using pa::testing::all_simple_paths;

namespace {

pa::Graph weighted(const pa::GraphModel& m, std::uint64_t seed) {
  return pa::assign_weights(pa::generate(m, seed), pa::WeightScheme::uniform(1, 9, seed + 1));
}

}  // namespace

TEST(ShortestPath, MatchesExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::er(10, 0.4), seed);
    const auto all = all_simple_paths(g, 0, 9);
    const auto p = pa::shortest_path(g, 0, 9);
    ASSERT_EQ(p.has_value(), !all.empty());
    if (!p) continue;
    EXPECT_DOUBLE_EQ(p->length, all.front().length);
    EXPECT_EQ(p->nodes, all.front().nodes) << "tie break must pick the smallest node sequence";
    EXPECT_TRUE(pa::is_valid_path(g, *p));
  }
}

TEST(ShortestPath, DirectedAndRemovals) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::der(9, 0.35), seed);
    pa::EdgeMask removed(g.num_edges());
    for (pa::EdgeId e = 0; e < g.num_edges(); e += 3) removed.set(e);
    const auto all = all_simple_paths(g, 1, 7, removed);
    const auto p = pa::shortest_path(g, 1, 7, removed);
    ASSERT_EQ(p.has_value(), !all.empty());
    if (p) {
      EXPECT_EQ(p->nodes, all.front().nodes);
      for (pa::EdgeId e : p->edges) EXPECT_FALSE(removed.test(e));
    }
  }
}

TEST(ShortestPath, TrivialCases) {
  const pa::Graph g = pa::generate(pa::GraphModel::lattice(2, 2), 0);
  const auto self = pa::shortest_path(g, 0, 0);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->hops(), 0);
  const std::vector<pa::EdgeSpec> two{{0, 1}, {2, 3}};
  EXPECT_FALSE(pa::shortest_path(pa::build_graph(false, two), 0, 3));
  EXPECT_THROW(pa::make_path(g, {0, 3}), pa::InvalidParameter);
}

TEST(KShortest, MatchesSortedEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::er(10, 0.5), seed);
    const auto all = all_simple_paths(g, 0, 9);
    const auto k = pa::k_shortest_simple_paths(g, 0, 9, 10);
    ASSERT_EQ(k.size(), std::min<std::size_t>(10, all.size()));
    for (std::size_t i = 0; i < k.size(); ++i) {
      EXPECT_DOUBLE_EQ(k[i].length, all[i].length) << "seed " << seed << " rank " << i;
      EXPECT_EQ(k[i].nodes, all[i].nodes);
    }
  }
}

TEST(KShortest, EnumeratorExhaustsEveryPath) {
  const pa::Graph g = weighted(pa::GraphModel::er(8, 0.5), 3);
  const auto all = all_simple_paths(g, 0, 7);
  pa::SimplePathEnumerator it(g, 0, 7);
  std::size_t n = 0;
  while (auto p = it.next()) {
    ASSERT_LT(n, all.size());
    EXPECT_EQ(p->nodes, all[n].nodes);
    ++n;
  }
  EXPECT_EQ(n, all.size());
}

TEST(ViaEdge, MatchesBruteForceOverSimplePaths) {
  int overlapping = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::er(9, 0.5), seed);
    const auto all = all_simple_paths(g, 0, 8);
    for (pa::EdgeId e = 0; e < g.num_edges(); ++e) {
      const pa::Path* best = nullptr;
      for (const pa::Path& p : all) {
        if (p.uses_edge(e)) {
          best = &p;
          break;
        }
      }
      const auto got = pa::shortest_path_via_edge(g, 0, 8, e);
      ASSERT_EQ(got.has_value(), best != nullptr) << "seed " << seed << " edge " << e;
      if (!got) continue;
      EXPECT_DOUBLE_EQ(got->length, best->length);
      EXPECT_TRUE(got->uses_edge(e));
      EXPECT_TRUE(pa::is_valid_path(g, *got));
      // Count cases where the two unconstrained halves would collide.
      const pa::Edge& ed = g.edge(e);
      const auto a = pa::shortest_path(g, 0, ed.u);
      const auto b = pa::shortest_path(g, ed.v, 8);
      if (a && b) {
        std::set<pa::NodeId> seen(a->nodes.begin(), a->nodes.end());
        for (pa::NodeId v : b->nodes) overlapping += seen.count(v) ? 1 : 0;
      }
    }
  }
  EXPECT_GT(overlapping, 0) << "suite should include node-overlapping halves";
}

TEST(ViaNode, MatchesBruteForceOverSimplePaths) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::er(9, 0.45), seed);
    const auto all = all_simple_paths(g, 0, 8);
    for (pa::NodeId v = 1; v < 8; ++v) {
      const pa::Path* best = nullptr;
      for (const pa::Path& p : all) {
        if (p.uses_node(v)) {
          best = &p;
          break;
        }
      }
      const auto got = pa::shortest_path_via_node(g, 0, 8, v);
      ASSERT_EQ(got.has_value(), best != nullptr);
      if (got) {
        EXPECT_DOUBLE_EQ(got->length, best->length);
        EXPECT_TRUE(got->uses_node(v));
      }
    }
  }
}

TEST(NextCompetingPath, IsSecondEntryExcludingPStar) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const pa::Graph g = weighted(pa::GraphModel::er(12, 0.3), seed);
    const auto k = pa::k_shortest_simple_paths(g, 0, 11, 4);
    if (k.size() < 3) continue;
    const pa::Path& p_star = k[1];
    const auto next = pa::next_competing_path(g, p_star);
    ASSERT_TRUE(next);
    EXPECT_EQ(next->nodes, k[0].nodes);
    const auto after_first = pa::next_competing_path(g, k[0]);
    ASSERT_TRUE(after_first);
    EXPECT_EQ(after_first->nodes, k[1].nodes);
  }
  const pa::Graph line = pa::generate(pa::GraphModel::lattice(1, 4), 0);
  EXPECT_FALSE(pa::next_competing_path(line, pa::make_path(line, {0, 1, 2, 3})));
}
