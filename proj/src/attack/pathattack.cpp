#include <algorithm>
#include <chrono>
#include <cmath>

#include "pathattack/attack.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/random.hpp"

namespace pathattack {

std::string engine_name(Engine engine) { return engine == Engine::kGreedy ? "greedy" : "rand"; }

Engine parse_engine(const std::string& name) {
  if (name == "greedy") return Engine::kGreedy;
  if (name == "rand") return Engine::kRand;
  throw InvalidParameter("unknown engine '" + name + "'");
}

bool not_longer(double length, double target) {
  return length <= target + 1e-9 * std::max(1.0, std::abs(target));
}

PathAttackReport pathattack(const Graph& g, const Path& p_star, const EdgeSet& keep,
                            const PathAttackOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const EdgeMask base(g.num_edges(), options.base_removed);
  if (!is_valid_path(g, p_star, base)) throw InvalidParameter("target path is not present in the graph");
  const int cap = options.iteration_cap > 0 ? options.iteration_cap : 10 * std::max(1, g.num_edges());

  PathConstraintSet pcs(g.num_edges(), keep);
  PathAttackReport report;
  EdgeSet removed = options.base_removed;
  normalize(removed);
  while (true) {
    auto competitor = next_competing_path(g, p_star, EdgeMask(g.num_edges(), removed));
    if (!competitor || !not_longer(competitor->length, p_star.length)) break;
    if (report.iterations >= cap) throw IterationCap("constraint generation exceeded iteration cap");
    if (!pcs.add(*competitor)) throw NumericalInstability("oracle returned a path that is already cut");
    report.generated_paths.push_back(*competitor);
    ++report.iterations;
    report.cut = options.engine == Engine::kGreedy
                     ? greedy_path_cover(g, pcs)
                     : rand_path_cover(g, pcs, mix_seed(options.seed, report.iterations), options.rand);
    removed = options.base_removed;
    removed.insert(removed.end(), report.cut.cut_edges.begin(), report.cut.cut_edges.end());
    normalize(removed);
  }
  report.final_check = is_valid_path_cut(g, p_star, removed);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report.wall_time_seconds = elapsed.count();
  return report;
}

bool is_valid_path_cut(const Graph& g, const Path& p_star, const EdgeSet& cut) {
  const EdgeMask mask(g.num_edges(), cut);
  if (!is_valid_path(g, p_star, mask)) return false;
  auto competitor = next_competing_path(g, p_star, mask);
  return !competitor || !not_longer(competitor->length, p_star.length);
}

}  // namespace pathattack
