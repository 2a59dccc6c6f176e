// Acceptance run: one PASS/FAIL line per criterion C1..C9.
//
// The whole suite runs twice with the same seeds; C9 compares the raw dumps of
// the two runs. The first run's dump is written to argv[1] when given.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pathattack/attack.hpp"
#include "pathattack/baselines.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/experiment.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/oracles.hpp"
#include "pathattack/path_cover.hpp"
#include "pathattack/reductions.hpp"
#include "pathattack/report.hpp"
#include "pathattack/target_cut.hpp"
#include "random_instances.hpp"

namespace pa = pathattack;
using pa::testing::num;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Run {
  std::string dump;
  long validity_checks = 0;
  long validity_failures = 0;
  std::vector<std::string> invalid_examples;
  Verdict c[10];

  void line(const std::string& s) { dump += s + "\n"; }
  void check_valid(bool ok, const std::string& what) {
    ++validity_checks;
    if (!ok) {
      ++validity_failures;
      if (invalid_examples.size() < 5) invalid_examples.push_back(what);
    }
  }
};

bool same_cost(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict timed(double limit, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = body();
  v.seconds = seconds_since(start);
  if (v.seconds > limit) {
    v.pass = false;
    v.detail += "; over the " + num(limit) + " s limit";
  }
  return v;
}

// ---------------------------------------------------------------------------

Verdict oracle_optimality(Run& run) {
  const int instances = 200;
  int violations = 0;
  int rand_exact = 0;
  int errors = 0;
  for (int i = 0; i < instances; ++i) {
    const auto inst = pa::testing::random_path_instance(pa::mix_seed(kSeed, 100 + i), 12, 14);
    const pa::Graph& g = inst.graph;
    const pa::Path& p = inst.p_star;
    const pa::CutSolution opt = pa::brute_force_path_cut(g, p, p.edges);
    std::string row = "C1 " + std::to_string(i) + " " + inst.label + " n=" + std::to_string(g.num_nodes()) +
                      " m=" + std::to_string(g.num_edges()) + " opt=" + num(opt.cost);
    for (pa::Engine engine : {pa::Engine::kRand, pa::Engine::kGreedy}) {
      pa::PathAttackOptions o;
      o.engine = engine;
      o.seed = pa::mix_seed(kSeed, 1000 + i);
      try {
        const pa::PathAttackReport r = pa::pathattack(g, p, p.edges, o);
        const double size = static_cast<double>(r.generated_paths.size());
        const double factor = engine == pa::Engine::kRand ? 4.0 * std::log(4.0 * std::max(1.0, size))
                                                          : pa::harmonic(r.generated_paths.size());
        const double cost = r.cut.total_cost;
        if (cost > factor * opt.cost + 1e-9 * std::max(1.0, opt.cost)) ++violations;
        if (engine == pa::Engine::kRand && same_cost(cost, opt.cost)) ++rand_exact;
        run.check_valid(r.final_check && pa::is_valid_path_cut(g, p, r.cut.cut_edges),
                        "C1 pathattack " + pa::engine_name(engine) + " #" + std::to_string(i));
        row += " " + pa::engine_name(engine) + "=" + num(cost) + "/" + std::to_string(r.generated_paths.size());
      } catch (const pa::Error&) {
        ++errors;
        row += " " + pa::engine_name(engine) + "=error";
      }
    }
    const pa::CutSolution gc = pa::greedy_cost_baseline(g, p);
    const pa::CutSolution ge = pa::greedy_eigenscore_baseline(g, p);
    run.check_valid(gc.valid && pa::is_valid_path_cut(g, p, gc.cut), "C1 greedy_cost #" + std::to_string(i));
    run.check_valid(ge.valid && pa::is_valid_path_cut(g, p, ge.cut), "C1 greedy_eigenscore #" + std::to_string(i));
    row += " gc=" + num(gc.cost) + " ge=" + num(ge.cost);
    run.line(row);
  }
  const double exact_share = static_cast<double>(rand_exact) / instances;
  Verdict v;
  v.pass = violations == 0 && errors == 0 && exact_share >= 0.75;
  v.detail = std::to_string(instances) + " instances, bound violations " + std::to_string(violations) +
             ", errors " + std::to_string(errors) + ", rand exact " + std::to_string(rand_exact) + "/" +
             std::to_string(instances) + " (need >= 75%)";
  return v;
}

// Unit-capacity max flow between s and t, ignoring the edge s-t itself.
double max_flow_without_direct_edge(const pa::Graph& g, pa::NodeId s, pa::NodeId t) {
  const int n = g.num_nodes();
  std::vector<std::vector<double>> cap(n, std::vector<double>(n, 0.0));
  for (const pa::Edge& e : g.edges()) {
    if ((e.u == s && e.v == t) || (e.u == t && e.v == s)) continue;
    cap[e.u][e.v] += e.cost;
    if (!g.directed()) cap[e.v][e.u] += e.cost;
  }
  double flow = 0.0;
  for (;;) {
    std::vector<int> prev(n, -1);
    prev[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && prev[t] < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (prev[v] < 0 && cap[u][v] > 0.0) {
          prev[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (prev[t] < 0) return flow;
    double push = std::numeric_limits<double>::infinity();
    for (int v = t; v != s; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
    for (int v = t; v != s; v = prev[v]) {
      cap[prev[v]][v] -= push;
      cap[v][prev[v]] += push;
    }
    flow += push;
  }
}

Verdict clique_closed_form(Run& run) {
  bool ok = true;
  std::string detail;
  for (int n : {6, 8, 10}) {
    const pa::CliqueFixture fx = pa::build_clique_fixture(n);
    const double flow = max_flow_without_direct_edge(fx.graph, fx.s, fx.t);
    const double cap = static_cast<double>((n - 2) * (n - 2) + (n - 2));
    for (pa::Engine engine : {pa::Engine::kGreedy, pa::Engine::kRand}) {
      pa::PathAttackOptions o;
      o.engine = engine;
      o.seed = pa::mix_seed(kSeed, 300 + n);
      const pa::PathAttackReport r = pa::pathattack(fx.graph, fx.p_star, fx.p_star.edges, o);
      const double paths = static_cast<double>(r.generated_paths.size());
      const bool good = r.cut.total_cost == n - 2 && flow == n - 2 && paths <= cap;
      ok = ok && good;
      run.check_valid(r.final_check && pa::is_valid_path_cut(fx.graph, fx.p_star, r.cut.cut_edges),
                      "C3 N=" + std::to_string(n));
      detail += (detail.empty() ? "" : ", ") + std::string("N=") + std::to_string(n) + " " +
                pa::engine_name(engine) + " cost " + num(r.cut.total_cost) + " flow " + num(flow) + " |P| " +
                num(paths) + "<=" + num(cap);
      run.line("C3 N=" + std::to_string(n) + " " + pa::engine_name(engine) + " cost=" + num(r.cut.total_cost) +
               " flow=" + num(flow) + " paths=" + num(paths));
    }
  }
  return {ok, detail};
}

Verdict theorem_gap(Run& run) {
  const pa::GapFixture fx = pa::build_gap_fixture(5, 1.0, 10.0);
  pa::TargetCutInstance inst;
  inst.graph = &fx.graph;
  inst.s = fx.s;
  inst.t = fx.t;
  inst.target = pa::Target::edge(fx.target);
  inst.seed = pa::mix_seed(kSeed, 400);
  const pa::CutSolution path = pa::path_targeted_attack(inst);
  const pa::CutSolution heur = pa::heuristic_search(inst);
  const pa::CutSolution comb = pa::combinatorial_search(inst);
  for (const auto* s : {&path, &heur, &comb}) {
    run.check_valid(s->valid && pa::is_valid_target_cut(fx.graph, fx.s, fx.t, inst.target, s->cut), "C4");
  }
  run.line("C4 path=" + num(path.cost) + " heuristic=" + num(heur.cost) + " combinatorial=" + num(comb.cost));
  Verdict v;
  v.pass = path.cost == 50.0 && heur.cost == 1.0 && comb.cost == 1.0;
  v.detail = "path-targeted " + num(path.cost) + " (want 50), heuristic " + num(heur.cost) +
             ", combinatorial " + num(comb.cost) + " (want 1)";
  return v;
}

Verdict rounding_trials(Run& run) {
  // Twelve edges, six competitors of p* = 0-1-6, unit costs. The covering
  // LP optimum is 3.5, so the rounding actually has to work.
  const std::vector<pa::EdgeSpec> spec{{0, 1, 4}, {0, 2, 3}, {0, 3, 5}, {0, 4, 2}, {0, 6, 7}, {1, 6, 9},
                                       {2, 3, 1}, {2, 4, 4}, {2, 6, 6}, {3, 6, 8}, {4, 6, 6}, {5, 6, 5}};
  const pa::Graph g = pa::build_graph(false, spec);
  const auto paths = pa::k_shortest_simple_paths(g, 0, 6, 7);
  const pa::Path p_star = pa::make_path(g, {0, 1, 6});
  pa::PathConstraintSet pcs(g.num_edges(), p_star.edges);
  for (int i = 0; i < 6 && i < static_cast<int>(paths.size()); ++i) pcs.add(paths[i]);
  std::vector<double> costs(g.num_edges(), 1.0);
  const pa::LPSolution lp = pa::solve_cover_lp(costs, pcs.rows(), pcs.keep());
  const int runs = 10000;
  long total = 0;
  for (int i = 0; i < runs; ++i) total += pa::rand_path_cover(g, pcs, pa::mix_seed(kSeed, 500000 + i)).trials;
  const double mean = static_cast<double>(total) / runs;
  run.line("C5 edges=" + std::to_string(g.num_edges()) + " paths=" + std::to_string(pcs.size()) +
           " lp=" + num(lp.objective_value) + " trials=" + std::to_string(total));
  Verdict v;
  v.pass = g.num_edges() == 12 && pcs.size() == 6 && paths.size() == 7 && paths[6] == p_star && mean < 2.2;
  v.detail = std::to_string(runs) + " runs on 12 edges / 6 paths (LP " + num(lp.objective_value) +
             "), mean trials " + num(mean) + " (need < 2.2)";
  return v;
}

struct TargetInstance {
  pa::Graph graph;
  pa::NodeId s = pa::kNoNode;
  pa::NodeId t = pa::kNoNode;
  pa::Target target;
  std::string label;
};

TargetInstance random_target_instance(std::uint64_t seed, pa::ElementKind kind) {
  pa::Rng rng(seed);
  const int max_edges = kind == pa::ElementKind::kEdge ? 15 : 14;
  for (;;) {
    const pa::GraphModel model = pa::testing::small_model(rng, 10);
    const pa::WeightScheme scheme = pa::testing::small_scheme(rng);
    pa::Graph g = pa::assign_weights(pa::generate(model, rng()), scheme);
    if (g.num_edges() > max_edges || g.num_nodes() < 4) continue;
    const pa::NodeId s = static_cast<pa::NodeId>(pa::testing::uniform_int(rng, 0, g.num_nodes() - 1));
    pa::NodeId t = static_cast<pa::NodeId>(pa::testing::uniform_int(rng, 0, g.num_nodes() - 2));
    if (t >= s) ++t;
    if (!pa::reachable(g, s, t)) continue;
    const int skip = pa::testing::uniform_int(rng, 1, 3);
    std::int32_t x = -1;
    try {
      x = pa::select_target_element(g, s, t, kind, skip, 2000);
    } catch (const pa::Exhausted&) {
      continue;
    }
    const pa::Target target = kind == pa::ElementKind::kEdge ? pa::Target::edge(x) : pa::Target::node(x);
    if (!pa::shortest_path_via(g, s, t, target)) continue;
    return {std::move(g), s, t, target, model.name() + "/" + scheme.to_string()};
  }
}

Verdict target_cut_optimality(Run& run) {
  const int per_kind = 100;
  int mismatches = 0;
  int heuristic_below = 0;
  int ties = 0;
  int timeouts = 0;
  int total = 0;
  for (pa::ElementKind kind : {pa::ElementKind::kEdge, pa::ElementKind::kNode}) {
    const char* tag = kind == pa::ElementKind::kEdge ? "edge" : "node";
    for (int i = 0; i < per_kind; ++i) {
      const TargetInstance ti =
          random_target_instance(pa::mix_seed(kSeed, (kind == pa::ElementKind::kEdge ? 600 : 700) * 1000 + i), kind);
      const pa::CutSolution opt = pa::brute_force_target_cut(ti.graph, ti.s, ti.t, ti.target);
      pa::TargetCutInstance inst;
      inst.graph = &ti.graph;
      inst.s = ti.s;
      inst.t = ti.t;
      inst.target = ti.target;
      inst.seed = pa::mix_seed(kSeed, 800000 + i);
      const double eps = inst.tolerance();
      const pa::CutSolution comb = pa::combinatorial_search(inst);
      const pa::CutSolution heur = pa::heuristic_search(inst);
      const pa::CutSolution path = pa::path_targeted_attack(inst);
      ++total;
      if (comb.status == pa::CutStatus::kTimedOut) ++timeouts;
      if (std::abs(comb.cost - opt.cost) > eps) ++mismatches;
      if (heur.cost < comb.cost - eps) ++heuristic_below;
      if (std::abs(heur.cost - comb.cost) <= eps) ++ties;
      const std::string where = std::string("C6 ") + tag + " #" + std::to_string(i);
      for (const auto* s : {&comb, &heur, &path}) {
        run.check_valid(s->valid && pa::is_valid_target_cut(ti.graph, ti.s, ti.t, ti.target, s->cut), where);
      }
      run.line(where + " " + ti.label + " s=" + std::to_string(ti.s) + " t=" + std::to_string(ti.t) +
               " target=" + std::to_string(ti.target.id) + " opt=" + num(opt.cost) + " comb=" + num(comb.cost) +
               " heur=" + num(heur.cost) + " path=" + num(path.cost));
    }
  }
  const double tie_share = static_cast<double>(ties) / total;
  Verdict v;
  v.pass = mismatches == 0 && heuristic_below == 0 && timeouts == 0 && tie_share >= 0.6;
  v.detail = std::to_string(total) + " instances (edge+node), combinatorial off optimum " +
             std::to_string(mismatches) + ", timeouts " + std::to_string(timeouts) + ", heuristic below " +
             std::to_string(heuristic_below) + ", heuristic ties " + std::to_string(ties) + "/" +
             std::to_string(total) + " (need >= 60%)";
  return v;
}

Verdict reduction_soundness(Run& run) {
  const int graphs = 50;
  int separated = 0;
  int cuts = 0;
  int line_equal = 0;
  int line_total = 0;
  for (int i = 0; i < graphs; ++i) {
    pa::Rng rng(pa::mix_seed(kSeed, 900 + i));
    pa::Graph g;
    do {
      g = pa::generate(pa::testing::small_model(rng, 8), rng());
    } while (g.num_nodes() < 3 || g.num_edges() == 0);
    std::vector<pa::NodeId> nodes(g.num_nodes());
    for (pa::NodeId v = 0; v < g.num_nodes(); ++v) nodes[v] = v;
    std::shuffle(nodes.begin(), nodes.end(), rng);
    const pa::ReductionInstance fx = pa::build_three_terminal_fixture(g, nodes[0], nodes[1], nodes[2]);
    std::string row = "C7 three-terminal #" + std::to_string(i) + " terminals=" + pa::testing::join(fx.terminals);
    for (pa::Engine engine : {pa::Engine::kGreedy, pa::Engine::kRand}) {
      pa::PathAttackOptions o;
      o.engine = engine;
      o.seed = pa::mix_seed(kSeed, 950 + i);
      const pa::PathAttackReport r = pa::pathattack(fx.reduced, fx.p_star, fx.p_star.edges, o);
      const pa::EdgeSet mapped = pa::map_three_terminal_cut(fx, r.cut.cut_edges);
      run.check_valid(r.final_check && pa::is_valid_path_cut(fx.reduced, fx.p_star, r.cut.cut_edges),
                      "C7 three-terminal #" + std::to_string(i));
      ++cuts;
      if (pa::terminals_separated(g, fx.terminals, mapped)) ++separated;
      row += " " + pa::engine_name(engine) + "=" + std::to_string(r.cut.cut_edges.size()) + "->" +
             std::to_string(mapped.size());
    }
    run.line(row);

    // Node removal on the line-graph fixture against edge removal on the
    // original, unit-weight graph.
    pa::testing::PathInstance li = pa::testing::random_path_instance(pa::mix_seed(kSeed, 980 + i), 8, 14, true);
    std::vector<double> weights(li.graph.num_edges(), 1.0);
    std::vector<double> costs(li.graph.num_edges());
    for (double& c : costs) c = pa::testing::uniform_int(rng, 1, 5);
    const pa::Graph lg = li.graph.with_values(weights, costs);
    const pa::CutSolution edge_opt = pa::brute_force_path_cut(lg, li.p_star, li.p_star.edges);
    const pa::ReductionInstance lf = pa::build_line_graph_fixture(lg, li.p_star);
    const pa::NodeCutOptimum node_opt = pa::brute_force_node_removal(lf.reduced, lf.p_star, lf.node_cost);
    const pa::EdgeSet back = pa::map_line_graph_nodes(lf, node_opt.removed);
    ++line_total;
    const bool equal = same_cost(node_opt.cost, edge_opt.cost) && pa::is_valid_path_cut(lg, li.p_star, back);
    if (equal) ++line_equal;
    run.line("C7 line-graph #" + std::to_string(i) + " edges=" + std::to_string(lg.num_edges()) +
             " edge_opt=" + num(edge_opt.cost) + " node_opt=" + num(node_opt.cost));
  }
  Verdict v;
  v.pass = separated == cuts && line_equal == line_total;
  v.detail = "three-terminal separated " + std::to_string(separated) + "/" + std::to_string(cuts) +
             ", line-graph optimum equal " + std::to_string(line_equal) + "/" + std::to_string(line_total);
  return v;
}

Verdict scaled_trend(Run& run) {
  pa::ExperimentConfig cfg;
  cfg.graph.model = pa::GraphModel::er(200, 0.05);
  cfg.weights = "uniform:1:41";
  cfg.trials = 20;
  cfg.p_star_rank = 20;
  cfg.problem = pa::ProblemKind::kPath;
  cfg.algorithms = {"greedy_cost", "pathattack_greedy", "pathattack_rand"};
  cfg.seed = kSeed;
  const std::vector<pa::TrialRecord> records = pa::run_experiment(cfg);
  for (const pa::TrialRecord& rec : records) {
    for (const pa::AlgorithmResult& r : rec.results) {
      if (r.status == "ok") run.check_valid(r.valid, "C8 " + r.algorithm + " #" + std::to_string(rec.trial));
    }
  }
  run.dump += pa::records_to_csv(records);
  const auto summary = pa::summarize(records, "greedy_cost");
  double greedy = NAN;
  double rand = NAN;
  int greedy_n = 0;
  int rand_n = 0;
  for (const auto& s : summary) {
    if (s.algorithm == "pathattack_greedy") greedy = s.mean_ratio, greedy_n = s.ratio_count;
    if (s.algorithm == "pathattack_rand") rand = s.mean_ratio, rand_n = s.ratio_count;
  }
  Verdict v;
  v.pass = greedy_n == cfg.trials && rand_n == cfg.trials && greedy <= 1.0 && rand <= 1.0;
  v.detail = "mean cost ratio vs GreedyCost over " + std::to_string(greedy_n) + "/" + std::to_string(rand_n) +
             " trials: pathattack_greedy " + num(greedy) + ", pathattack_rand " + num(rand) + " (need <= 1)";
  return v;
}

Run run_suite() {
  Run run;
  run.c[1] = timed(300, [&] { return oracle_optimality(run); });
  run.c[3] = timed(10, [&] { return clique_closed_form(run); });
  run.c[4] = timed(5, [&] { return theorem_gap(run); });
  run.c[5] = timed(30, [&] { return rounding_trials(run); });
  run.c[6] = timed(600, [&] { return target_cut_optimality(run); });
  run.c[7] = timed(120, [&] { return reduction_soundness(run); });
  run.c[8] = timed(300, [&] { return scaled_trend(run); });
  Verdict& v2 = run.c[2];
  v2.pass = run.validity_failures == 0 && run.validity_checks > 0;
  v2.detail = std::to_string(run.validity_checks - run.validity_failures) + "/" +
              std::to_string(run.validity_checks) + " cuts valid";
  for (const auto& e : run.invalid_examples) v2.detail += "; invalid: " + e;
  return run;
}

const char* kNames[10] = {"",
                          "oracle optimality (Force Path Cut)",
                          "validity of every returned cut",
                          "clique closed form",
                          "cost gap on the bottleneck fixture",
                          "rounding trial expectation",
                          "target-cut optimality",
                          "reduction soundness",
                          "scaled trend on ER(200, 0.05)",
                          "determinism of raw dumps"};

}  // namespace

int main(int argc, char** argv) {
  const Run first = run_suite();
  if (argc > 1) {
    std::ofstream out(argv[1], std::ios::binary);
    out << first.dump;
  }
  const auto start = std::chrono::steady_clock::now();
  const Run second = run_suite();
  Verdict c9;
  c9.pass = first.dump == second.dump;
  c9.seconds = seconds_since(start);
  c9.detail = std::to_string(first.dump.size()) + " bytes, " + (c9.pass ? "identical" : "different") +
              " across two runs";

  int failed = 0;
  for (int i = 1; i <= 9; ++i) {
    const Verdict& v = i == 9 ? c9 : first.c[i];
    if (!v.pass) ++failed;
    std::printf("C%d %s  %s: %s [%.1f s]\n", i, v.pass ? "PASS" : "FAIL", kNames[i], v.detail.c_str(), v.seconds);
  }
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
