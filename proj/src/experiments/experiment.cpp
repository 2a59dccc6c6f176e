#include "pathattack/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "pathattack/attack.hpp"
#include "pathattack/baselines.hpp"
#include "pathattack/edge_list_io.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/oracles.hpp"
#include "pathattack/random.hpp"

namespace pathattack {

std::pair<NodeId, NodeId> select_terminals(const Graph& g, const TerminalRule& rule, std::uint64_t seed) {
  const int n = g.num_nodes();
  if (n < 2) throw NoCandidate("terminal selection needs at least two nodes");
  Rng rng(seed);
  if (rule.kind == TerminalRule::Kind::kUniform) {
    const NodeId s = static_cast<NodeId>(std::uniform_int_distribution<int>(0, n - 1)(rng));
    NodeId t = static_cast<NodeId>(std::uniform_int_distribution<int>(0, n - 2)(rng));
    if (t >= s) ++t;
    return {s, t};
  }
  if (rule.hops < 1) throw InvalidParameter("hop distance must be positive");
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  for (NodeId s : order) {
    const std::vector<int> dist = hop_distances(g, s);
    std::vector<NodeId> ring;
    for (NodeId v = 0; v < n; ++v) {
      if (dist[v] == rule.hops) ring.push_back(v);
    }
    if (ring.empty()) continue;
    const auto pick = std::uniform_int_distribution<std::size_t>(0, ring.size() - 1)(rng);
    return {s, ring[pick]};
  }
  throw NoCandidate("no node pair is exactly " + std::to_string(rule.hops) + " hops apart");
}

std::int32_t select_target_element(const Graph& g, NodeId s, NodeId t, ElementKind kind, int skip,
                                   std::size_t path_cap) {
  if (skip < 1) throw InvalidParameter("skip must be at least 1");
  SimplePathEnumerator paths(g, s, t);
  auto first = paths.next();
  if (!first) throw Exhausted("no s-t path");
  std::vector<std::uint8_t> seen(kind == ElementKind::kEdge ? g.num_edges() : g.num_nodes(), 0);
  const auto& initial = kind == ElementKind::kEdge ? first->edges : first->nodes;
  for (std::int32_t x : initial) seen[x] = 1;
  int found = 0;
  for (std::size_t count = 1; count < path_cap; ++count) {
    auto p = paths.next();
    if (!p) break;
    for (std::int32_t x : kind == ElementKind::kEdge ? p->edges : p->nodes) {
      if (seen[x]) continue;
      seen[x] = 1;
      if (++found == skip) return x;
    }
  }
  throw Exhausted("fewer than " + std::to_string(skip) + " elements off the initial shortest path");
}

std::string problem_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPath:
      return "path";
    case ProblemKind::kEdge:
      return "edge";
    case ProblemKind::kNode:
      return "node";
    case ProblemKind::kRemove:
      return "remove";
  }
  return "?";
}

ProblemKind parse_problem(const std::string& name) {
  if (name == "path") return ProblemKind::kPath;
  if (name == "edge") return ProblemKind::kEdge;
  if (name == "node") return ProblemKind::kNode;
  if (name == "remove") return ProblemKind::kRemove;
  throw InvalidParameter("unknown problem '" + name + "'");
}

std::vector<std::string> algorithms_for(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kPath:
      return {"greedy_cost", "greedy_eigenscore", "pathattack_greedy", "pathattack_rand"};
    case ProblemKind::kEdge:
    case ProblemKind::kNode:
      return {"path_targeted", "heuristic", "combinatorial"};
    case ProblemKind::kRemove:
      return {"greedy_cost", "pathattack_greedy", "pathattack_rand"};
  }
  return {};
}

std::string baseline_algorithm(ProblemKind kind) { return algorithms_for(kind).front(); }

void ExperimentConfig::validate() const {
  if (trials < 1) throw InvalidParameter("trials must be at least 1");
  if (p_star_rank < 1) throw InvalidParameter("p_star_rank must be at least 1");
  if (!graph.model && graph.file.empty()) throw InvalidParameter("config names neither a model nor a file");
  if (graph.model) graph.model->validate();
  if (target_skip < 1) throw InvalidParameter("target_skip must be at least 1");
  if (neighborhood_hops < 0) throw InvalidParameter("neighborhood_hops must be nonnegative");
  if (terminals.kind == TerminalRule::Kind::kHopDistance && terminals.hops < 1) {
    throw InvalidParameter("terminal hop distance must be positive");
  }
  const auto known = algorithms_for(problem);
  for (const auto& a : algorithms) {
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw InvalidParameter("algorithm '" + a + "' does not apply to problem " + problem_name(problem));
    }
  }
  if (weights != "keep") WeightScheme::parse(weights, 0);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PATHATTACK_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  return 1;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string failure_class(const std::exception& e) {
  if (dynamic_cast<const Stuck*>(&e)) return "stuck";
  if (dynamic_cast<const IterationCap*>(&e)) return "iteration_cap";
  if (dynamic_cast<const ResourceExhausted*>(&e)) return "resource_exhausted";
  if (dynamic_cast<const InfeasibleCover*>(&e)) return "infeasible";
  if (dynamic_cast<const InfeasibleInstance*>(&e)) return "infeasible";
  if (dynamic_cast<const NonConvergence*>(&e)) return "nonconvergence";
  if (dynamic_cast<const NumericalInstability*>(&e)) return "numerical";
  return "error";
}

struct TrialContext {
  const ExperimentConfig* cfg = nullptr;
  std::uint64_t seed = 0;
  Graph graph;
  NodeId s = kNoNode;
  NodeId t = kNoNode;
  Path p_star;
  Target target;
  std::vector<double> node_cost;
};

// Runs one algorithm and fills cost, iterations and validity.
void run_algorithm(const TrialContext& ctx, const std::string& name, std::size_t index, AlgorithmResult& out) {
  const ExperimentConfig& cfg = *ctx.cfg;
  const Graph& g = ctx.graph;
  const std::uint64_t seed = mix_seed(ctx.seed, 100 + index);
  switch (cfg.problem) {
    case ProblemKind::kPath: {
      if (name == "greedy_cost" || name == "greedy_eigenscore") {
        const CutSolution sol = name == "greedy_cost" ? greedy_cost_baseline(g, ctx.p_star)
                                                      : greedy_eigenscore_baseline(g, ctx.p_star);
        out.cost = sol.cost;
        out.iterations = sol.iterations;
        out.valid = is_valid_path_cut(g, ctx.p_star, sol.cut);
        return;
      }
      PathAttackOptions opt;
      opt.engine = name == "pathattack_greedy" ? Engine::kGreedy : Engine::kRand;
      opt.seed = seed;
      const PathAttackReport rep = pathattack(g, ctx.p_star, ctx.p_star.edges, opt);
      out.cost = rep.cut.total_cost;
      out.iterations = rep.iterations;
      out.valid = is_valid_path_cut(g, ctx.p_star, rep.cut.cut_edges);
      return;
    }
    case ProblemKind::kEdge:
    case ProblemKind::kNode: {
      TargetCutInstance inst;
      inst.graph = &g;
      inst.s = ctx.s;
      inst.t = ctx.t;
      inst.target = ctx.target;
      inst.limits = cfg.limits;
      inst.engine = cfg.target_engine;
      inst.seed = seed;
      const SearchMode mode = name == "heuristic"       ? SearchMode::kHeuristic
                              : name == "combinatorial" ? SearchMode::kCombinatorial
                                                        : SearchMode::kPathTargeted;
      const CutSolution sol = target_cut_search(inst, mode);
      if (sol.status == CutStatus::kNoThroughPath) {
        out.status = "no_through_path";
        return;
      }
      if (sol.status == CutStatus::kTimedOut) out.status = "timeout";
      out.cost = sol.cost;
      out.iterations = sol.iterations;
      out.valid = is_valid_target_cut(g, ctx.s, ctx.t, ctx.target, sol.cut);
      return;
    }
    case ProblemKind::kRemove: {
      if (name == "greedy_cost") {
        const CutSolution sol = greedy_cost_node_baseline(g, ctx.p_star, ctx.node_cost);
        out.cost = sol.cost;
        out.iterations = sol.iterations;
        out.valid = is_valid_node_removal(g, ctx.p_star, sol.cut);
        return;
      }
      NodeAttackInstance inst;
      inst.graph = &g;
      inst.p_star = ctx.p_star;
      inst.node_cost = ctx.node_cost;
      const Engine engine = name == "pathattack_greedy" ? Engine::kGreedy : Engine::kRand;
      const PathAttackReport rep = pathattack_nodes(inst, engine, seed);
      out.cost = rep.cut.total_cost;
      out.iterations = rep.iterations;
      out.valid = is_valid_node_removal(g, ctx.p_star, rep.cut.cut_edges);
      return;
    }
  }
}

std::optional<double> run_oracle(const TrialContext& ctx) {
  const ExperimentConfig& cfg = *ctx.cfg;
  const Graph& g = ctx.graph;
  const int cap = cfg.oracle_max_elements;
  if (cap <= 0) return std::nullopt;
  try {
    switch (cfg.problem) {
      case ProblemKind::kPath:
        return brute_force_path_cut(g, ctx.p_star, {}, cap).cost;
      case ProblemKind::kEdge:
      case ProblemKind::kNode: {
        const CutSolution sol = brute_force_target_cut(g, ctx.s, ctx.t, ctx.target, cap);
        if (sol.status != CutStatus::kSolved) return std::nullopt;
        return sol.cost;
      }
      case ProblemKind::kRemove:
        return brute_force_node_removal(g, ctx.p_star, ctx.node_cost, cap).cost;
    }
  } catch (const TooLarge&) {
  }
  return std::nullopt;
}

TrialRecord run_trial(const ExperimentConfig& cfg, const Graph* shared, const std::string& shared_id, int trial) {
  TrialRecord rec;
  rec.trial = trial;
  TrialContext ctx;
  ctx.cfg = &cfg;
  ctx.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  try {
    Graph g;
    if (cfg.graph.model) {
      g = generate(*cfg.graph.model, mix_seed(ctx.seed, 1));
      rec.graph_id = cfg.graph.model->name() + "-" + std::to_string(trial);
    } else {
      g = *shared;
      rec.graph_id = shared_id;
    }
    if (cfg.weights != "keep") g = assign_weights(g, WeightScheme::parse(cfg.weights, mix_seed(ctx.seed, 2)));

    auto [s, t] = select_terminals(g, cfg.terminals, mix_seed(ctx.seed, 3));
    if (cfg.neighborhood_hops > 0) {
      const std::vector<int> dist = hop_distances(g, s);
      std::vector<NodeId> ball;
      NodeId s_local = kNoNode;
      NodeId t_local = kNoNode;
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (dist[v] < 0 || dist[v] > cfg.neighborhood_hops) continue;
        if (v == s) s_local = static_cast<NodeId>(ball.size());
        if (v == t) t_local = static_cast<NodeId>(ball.size());
        ball.push_back(v);
      }
      g = induced_subgraph(g, ball);
      s = s_local;
      t = t_local;
    }
    rec.s = s;
    rec.t = t;
    if (t == kNoNode || !reachable(g, s, t)) {
      rec.status = "unreachable";
      return rec;
    }
    ctx.s = s;
    ctx.t = t;

    if (cfg.problem == ProblemKind::kPath || cfg.problem == ProblemKind::kRemove) {
      const auto paths = k_shortest_simple_paths(g, s, t, static_cast<std::size_t>(cfg.p_star_rank));
      if (static_cast<int>(paths.size()) < cfg.p_star_rank) {
        rec.status = "exhausted";
        return rec;
      }
      ctx.p_star = paths.back();
      if (cfg.problem == ProblemKind::kRemove) {
        ctx.node_cost.resize(g.num_nodes());
        for (NodeId v = 0; v < g.num_nodes(); ++v) ctx.node_cost[v] = g.degree(v);
        if (!check_node_removal_feasible(g, ctx.p_star)) {
          rec.status = "infeasible";
          rec.p_star_length = ctx.p_star.length;
          rec.p_star_hops = ctx.p_star.hops();
          return rec;
        }
      }
    } else {
      const ElementKind kind = cfg.problem == ProblemKind::kEdge ? ElementKind::kEdge : ElementKind::kNode;
      try {
        const std::int32_t id = select_target_element(g, s, t, kind, cfg.target_skip);
        ctx.target = kind == ElementKind::kEdge ? Target::edge(id) : Target::node(id);
      } catch (const Exhausted&) {
        rec.status = "exhausted";
        return rec;
      }
      rec.target = ctx.target.id;
      auto via = shortest_path_via(g, s, t, ctx.target);
      if (!via) {
        rec.status = "exhausted";
        return rec;
      }
      ctx.p_star = *via;
    }
    rec.p_star_length = ctx.p_star.length;
    rec.p_star_hops = ctx.p_star.hops();
    ctx.graph = std::move(g);

    rec.oracle_cost = run_oracle(ctx);
    const double slack = [&] {
      if (cfg.problem != ProblemKind::kEdge && cfg.problem != ProblemKind::kNode) return 0.0;
      TargetCutInstance inst;
      inst.graph = &ctx.graph;
      return inst.tolerance();
    }();

    const std::vector<std::string> algos = cfg.algorithms.empty() ? algorithms_for(cfg.problem) : cfg.algorithms;
    for (std::size_t i = 0; i < algos.size(); ++i) {
      AlgorithmResult res;
      res.algorithm = algos[i];
      const auto start = Clock::now();
      try {
        run_algorithm(ctx, algos[i], i, res);
      } catch (const Error& e) {
        res.status = failure_class(e);
      }
      res.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      if ((res.status == "ok" || res.status == "timeout") && !res.valid) res.status = "invalid";
      if (rec.oracle_cost && (res.status == "ok" || res.status == "timeout")) {
        const double opt = *rec.oracle_cost;
        res.optimal = res.cost <= opt + std::max(slack, 1e-9 * std::max(1.0, opt));
      }
      rec.results.push_back(std::move(res));
    }
  } catch (const NoCandidate&) {
    rec.status = "no_candidate";
  } catch (const Error&) {
    rec.status = "error";
  }
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  Graph shared;
  std::string shared_id;
  if (!cfg.graph.model) {
    shared = load_edge_list(cfg.graph.file, format_for_path(cfg.graph.file), cfg.graph.directed);
    shared_id = std::filesystem::path(cfg.graph.file).stem().string();
  }
  std::vector<TrialRecord> records(cfg.trials);
  const int workers = std::min(resolve_workers(cfg.workers), cfg.trials);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < cfg.trials; i = next++) records[i] = run_trial(cfg, &shared, shared_id, i);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return records;
}

}  // namespace pathattack
