#include "pathattack/errors.hpp"
#include "pathattack/reductions.hpp"

namespace pathattack {

GapFixture build_gap_fixture(int k, double c_min, double c_max) {
  if (k < 1) throw InvalidParameter("gap fixture needs k >= 1");
  if (!(c_min > 0.0) || !(c_max >= c_min)) throw InvalidParameter("need 0 < c_min <= c_max");
  // s=0 m=1 u=2 v=3 t=4 w1=5 w2=6, then a_1..a_k.
  const NodeId s = 0, m = 1, u = 2, v = 3, t = 4, w1 = 5, w2 = 6;
  std::vector<EdgeSpec> specs;
  specs.push_back({s, m, 1.0, c_min});
  specs.push_back({m, u, 1.0, c_max});
  specs.push_back({u, v, 1.0, c_max});
  specs.push_back({v, t, 1.0, c_max});
  specs.push_back({s, w1, 1.0, c_max});
  specs.push_back({w1, w2, 1.0, c_max});
  specs.push_back({w2, u, 1.0, c_max});
  for (int i = 0; i < k; ++i) {
    const NodeId a = 7 + i;
    specs.push_back({m, a, 1.0, c_max});
    specs.push_back({a, t, 1.0, c_max});
  }
  GapFixture fx;
  fx.graph = build_graph(false, specs, 7 + k);
  fx.s = s;
  fx.t = t;
  fx.cheap_edge = 0;
  fx.target = 2;
  fx.k = k;
  fx.c_min = c_min;
  fx.c_max = c_max;
  return fx;
}

CliqueFixture build_clique_fixture(int n) {
  if (n < 3) throw InvalidParameter("clique fixture needs at least 3 nodes");
  const NodeId s = 0;
  const NodeId t = n - 1;
  std::vector<EdgeSpec> specs;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const double w = (a == s && b == t) ? static_cast<double>(n) : 1.0;
      specs.push_back({a, b, w, 1.0});
    }
  }
  CliqueFixture fx;
  fx.graph = build_graph(false, specs, n);
  fx.s = s;
  fx.t = t;
  fx.p_star = make_path(fx.graph, {s, t});
  return fx;
}

}  // namespace pathattack
