#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/random.hpp"
#include "pathattack/target_cut.hpp"

namespace pathattack {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Remaining time under an optional limit; <= 0 limits mean "unlimited" and
// map to 0, which the solvers read the same way.
double remaining(double limit, Clock::time_point start) {
  if (limit <= 0.0) return 0.0;
  return std::max(1e-3, limit - seconds_since(start));
}

double min_limit(double a, double b) {
  if (a <= 0.0) return b;
  if (b <= 0.0) return a;
  return std::min(a, b);
}

EdgeSet with(EdgeSet a, const EdgeSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(a);
  return a;
}

// Runs PATHATTACK with a fresh derived seed and counts the call.
class Attacker {
 public:
  explicit Attacker(const TargetCutInstance& inst) : inst_(inst) {}

  PathAttackReport run(const Path& p, const EdgeSet& keep, const EdgeSet& base_removed = {}) {
    PathAttackOptions opt;
    opt.engine = inst_.engine;
    opt.seed = mix_seed(inst_.seed, static_cast<std::uint64_t>(calls_));
    opt.base_removed = base_removed;
    ++calls_;
    return pathattack(*inst_.graph, p, keep, opt);
  }

  int calls() const { return calls_; }

 private:
  const TargetCutInstance& inst_;
  int calls_ = 0;
};

void finalize(const TargetCutInstance& inst, CutSolution& sol, EdgeSet cut) {
  const Graph& g = *inst.graph;
  normalize(cut);
  sol.cut = std::move(cut);
  sol.cost = total_cost(g, sol.cut);
  sol.valid = is_valid_target_cut(g, inst.s, inst.t, inst.target, sol.cut);
  sol.through_path = shortest_path(g, inst.s, inst.t, EdgeMask(g.num_edges(), sol.cut));
}

}  // namespace

double TargetCutInstance::tolerance() const {
  if (eps >= 0.0) return eps;
  return std::max(1e-12, 1e-6 * graph->total_cost());
}

void TargetCutInstance::validate() const {
  if (graph == nullptr) throw InvalidParameter("instance without a graph");
  if (!graph->valid_node(s) || !graph->valid_node(t)) throw InvalidParameter("invalid terminal");
  if (s == t) throw InvalidParameter("source and destination coincide");
  if (target.is_edge() ? !graph->valid_edge(target.id) : !graph->valid_node(target.id)) {
    throw InvalidParameter("target not in graph");
  }
}

ConstraintGenResult edge_cut_constraint_generation(const TargetCutInstance& inst, double budget,
                                                   std::vector<Path>& paths, double time_limit_seconds) {
  inst.validate();
  if (budget < 0.0) throw InvalidParameter("negative budget");
  const Graph& g = *inst.graph;
  const auto start = Clock::now();
  const EdgeSet avoid_target = target_edges(g, inst.target);
  ConstraintGenResult out;
  while (true) {
    JointProgram jp{&g, inst.s, inst.t, inst.target, budget, paths, {}};
    const double limit = min_limit(inst.limits.per_solve, remaining(time_limit_seconds, start));
    JointResult jr = solve_joint_program(jp, limit);
    ++out.joint_solves;
    if (jr.status != JointStatus::kSolved) {
      out.status = jr.status;
      return out;
    }
    const EdgeSet avoid = with(jr.cut, avoid_target);
    auto competitor = shortest_path(g, inst.s, inst.t, EdgeMask(g.num_edges(), avoid));
    if (!competitor || !not_longer(competitor->length, jr.path.length)) {
      out.status = JointStatus::kSolved;
      out.cut = std::move(jr.cut);
      out.path = std::move(jr.path);
      return out;
    }
    if (std::find(paths.begin(), paths.end(), *competitor) != paths.end()) {
      throw NumericalInstability("competitor already in the constraint set");
    }
    paths.push_back(std::move(*competitor));
    if (time_limit_seconds > 0.0 && seconds_since(start) > time_limit_seconds) {
      out.status = JointStatus::kTimedOut;
      return out;
    }
  }
}

CutSolution path_targeted_attack(const TargetCutInstance& inst) {
  inst.validate();
  const auto start = Clock::now();
  const Graph& g = *inst.graph;
  CutSolution sol;
  auto p = shortest_path_via(g, inst.s, inst.t, inst.target);
  if (!p) {
    sol.status = CutStatus::kNoThroughPath;
    return sol;
  }
  Attacker attacker(inst);
  const PathAttackReport r = attacker.run(*p, p->edges);
  sol.iterations = r.iterations;
  sol.pathattack_calls = attacker.calls();
  finalize(inst, sol, r.cut.cut_edges);
  sol.b_upper = sol.cost;
  sol.wall_time_seconds = seconds_since(start);
  return sol;
}

CutSolution combinatorial_search(const TargetCutInstance& inst) {
  inst.validate();
  const auto start = Clock::now();
  const Graph& g = *inst.graph;
  const double eps = inst.tolerance();
  CutSolution sol;
  auto p = shortest_path_via(g, inst.s, inst.t, inst.target);
  if (!p) {
    sol.status = CutStatus::kNoThroughPath;
    return sol;
  }
  if (is_valid_target_cut(g, inst.s, inst.t, inst.target, {})) {
    finalize(inst, sol, {});
    sol.wall_time_seconds = seconds_since(start);
    return sol;
  }
  Attacker attacker(inst);
  const PathAttackReport upper = attacker.run(*p, p->edges);
  EdgeSet best = upper.cut.cut_edges;
  double b_upper = upper.cut.total_cost;

  // Every path that avoids the target and is no longer than the shortest
  // through-target path must be cut by any valid solution, so the fractional
  // cover of those paths bounds the optimum from below.
  double b_lower = 0.0;
  {
    const EdgeSet keep = inst.target.is_edge() ? EdgeSet{inst.target.id} : EdgeSet{};
    std::vector<std::vector<EdgeId>> rows;
    try {
      const PathAttackReport lower = attacker.run(*p, keep);
      for (const Path& q : lower.generated_paths) {
        if (!path_uses_target(q, inst.target)) rows.push_back(q.edges);
      }
    } catch (const InfeasibleCover&) {
    }
    if (!rows.empty()) {
      std::vector<double> costs(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) costs[e] = g.cost(e);
      const LPSolution lp = solve_cover_lp(costs, rows, {});
      if (lp.status == LpStatus::kOptimal) b_lower = std::min(lp.objective_value, b_upper);
    }
  }
  // With integral costs the optimum is an integer, so an infeasible budget b
  // lifts the lower bound to floor(b) + 1 and midpoints can be rounded down.
  bool integral = true;
  for (EdgeId e = 0; e < g.num_edges() && integral; ++e) integral = g.cost(e) == std::floor(g.cost(e));
  if (integral) b_lower = std::ceil(b_lower - 1e-9);
  sol.bound_trace.emplace_back(b_lower, b_upper);

  std::vector<Path> paths;
  while (integral ? b_upper > b_lower : b_upper - b_lower > eps) {
    if (inst.limits.total > 0.0 && seconds_since(start) > inst.limits.total) {
      sol.status = CutStatus::kTimedOut;
      break;
    }
    const double b_mid = integral ? std::floor(0.5 * (b_upper + b_lower)) : 0.5 * (b_upper + b_lower);
    const std::size_t kept = paths.size();
    const double limit = min_limit(inst.limits.per_budget, remaining(inst.limits.total, start));
    ConstraintGenResult r = edge_cut_constraint_generation(inst, b_mid, paths, limit);
    sol.joint_solves += r.joint_solves;
    ++sol.iterations;
    if (r.status != JointStatus::kSolved) {
      // Constraints found under this budget need not bind larger ones.
      if (r.status == JointStatus::kTimedOut) sol.status = CutStatus::kTimedOut;
      b_lower = integral ? b_mid + 1.0 : b_mid;
      paths.resize(kept);
    } else {
      EdgeSet cand = r.cut;
      double cand_cost = total_cost(g, cand);
      auto through = shortest_path(g, inst.s, inst.t, EdgeMask(g.num_edges(), r.cut));
      if (through && path_uses_target(*through, inst.target)) {
        const PathAttackReport temp = attacker.run(*through, through->edges);
        if (temp.cut.total_cost < cand_cost) {
          cand = temp.cut.cut_edges;
          cand_cost = temp.cut.total_cost;
        }
      }
      b_upper = std::min(b_upper, cand_cost);
      if (cand_cost <= b_upper) best = std::move(cand);
    }
    sol.bound_trace.emplace_back(b_lower, b_upper);
  }
  sol.pathattack_calls = attacker.calls();
  sol.b_lower = b_lower;
  sol.b_upper = b_upper;
  finalize(inst, sol, best);
  sol.wall_time_seconds = seconds_since(start);
  return sol;
}

CutSolution heuristic_search(const TargetCutInstance& inst) {
  inst.validate();
  const auto start = Clock::now();
  const Graph& g = *inst.graph;
  const double eps = inst.tolerance();
  CutSolution sol;
  Attacker attacker(inst);
  EdgeSet always;
  EdgeSet never;
  EdgeSet best;
  double c_best = std::numeric_limits<double>::infinity();
  bool have_best = false;
  auto consider = [&](const EdgeSet& cut) {
    const double c = total_cost(g, cut);
    if (c < c_best && is_valid_target_cut(g, inst.s, inst.t, inst.target, cut)) {
      c_best = c;
      best = cut;
      have_best = true;
    }
  };
  const EdgeSet keep_target = inst.target.is_edge() ? EdgeSet{inst.target.id} : EdgeSet{};
  double b_lower = 0.0;
  double b_upper = 0.0;

  while (true) {
    if (inst.limits.total > 0.0 && seconds_since(start) > inst.limits.total) {
      sol.status = CutStatus::kTimedOut;
      break;
    }
    ++sol.iterations;
    const EdgeMask removed(g.num_edges(), always);
    auto p = shortest_path_via(g, inst.s, inst.t, inst.target, removed);
    if (!p) break;
    const PathAttackReport upper = attacker.run(*p, p->edges);
    b_upper = upper.cut.total_cost;
    consider(upper.cut.cut_edges);

    PathAttackReport lower;
    try {
      lower = attacker.run(*p, with(keep_target, never), always);
    } catch (const InfeasibleCover&) {
      break;
    }
    const EdgeSet lower_cut = with(lower.cut.cut_edges, always);
    b_lower = total_cost(g, lower_cut);
    // When the lower run leaves p intact it is itself a valid cut.
    if (lower.final_check) consider(lower_cut);
    sol.bound_trace.emplace_back(b_lower, b_upper);
    if (c_best <= b_lower + eps) break;
    if (!(b_lower < b_upper)) break;

    EdgeSet candidates;
    for (EdgeId e : p->edges) {
      if (contains(lower.cut.cut_edges, e)) candidates.push_back(e);
    }
    normalize(candidates);
    if (candidates.empty()) break;

    EdgeId keep_edge = kNoEdge;
    EdgeId cut_edge = kNoEdge;
    double cut_budget = std::numeric_limits<double>::infinity();
    for (EdgeId e : candidates) {
      EdgeSet trial = with(always, {e});
      const EdgeMask trial_mask(g.num_edges(), trial);
      auto pe = reachable(g, inst.s, inst.t, trial_mask)
                    ? shortest_path_via(g, inst.s, inst.t, inst.target, trial_mask)
                    : std::nullopt;
      if (!pe) {
        if (keep_edge == kNoEdge) keep_edge = e;
        continue;
      }
      const PathAttackReport r1 = attacker.run(*pe, pe->edges, trial);
      const EdgeSet full = with(trial, r1.cut.cut_edges);
      consider(full);
      const double budget = g.cost(e) + r1.cut.total_cost;
      if (budget < cut_budget) {
        cut_budget = budget;
        cut_edge = e;
      }
    }
    if (keep_edge != kNoEdge) {
      never = with(never, {keep_edge});
    } else {
      always = with(always, {cut_edge});
    }
  }
  sol.pathattack_calls = attacker.calls();
  sol.always = always;
  sol.never = never;
  sol.b_lower = b_lower;
  sol.b_upper = have_best ? c_best : b_upper;
  if (!have_best) {
    auto p = shortest_path_via(g, inst.s, inst.t, inst.target);
    if (!p) {
      sol.status = CutStatus::kNoThroughPath;
      return sol;
    }
  }
  finalize(inst, sol, best);
  sol.wall_time_seconds = seconds_since(start);
  return sol;
}

std::string mode_name(SearchMode mode) {
  switch (mode) {
    case SearchMode::kHeuristic: return "heuristic";
    case SearchMode::kCombinatorial: return "combinatorial";
    case SearchMode::kPathTargeted: return "path";
  }
  return "?";
}

SearchMode parse_mode(const std::string& name) {
  if (name == "heuristic") return SearchMode::kHeuristic;
  if (name == "combinatorial") return SearchMode::kCombinatorial;
  if (name == "path") return SearchMode::kPathTargeted;
  throw InvalidParameter("unknown search mode '" + name + "'");
}

CutSolution target_cut_search(const TargetCutInstance& inst, SearchMode mode) {
  switch (mode) {
    case SearchMode::kHeuristic: return heuristic_search(inst);
    case SearchMode::kCombinatorial: return combinatorial_search(inst);
    case SearchMode::kPathTargeted: return path_targeted_attack(inst);
  }
  throw InvalidParameter("unknown search mode");
}

CutSolution node_cut_search(const TargetCutInstance& inst, SearchMode mode) {
  if (inst.target.is_edge()) throw InvalidParameter("node search needs a node target");
  return target_cut_search(inst, mode);
}

}  // namespace pathattack
