#include "pathattack/path_cover.hpp"

#include <algorithm>
#include <cmath>

#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"
#include "pathattack/random.hpp"

namespace pathattack {
namespace {

std::vector<double> edge_costs(const Graph& g) {
  std::vector<double> costs(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) costs[e] = g.cost(e);
  return costs;
}

bool row_hit(const std::vector<int>& row, const std::vector<std::uint8_t>& chosen) {
  return std::any_of(row.begin(), row.end(), [&](int e) { return chosen[e] != 0; });
}

}  // namespace

PathConstraintSet::PathConstraintSet(int num_edges, EdgeSet keep)
    : num_edges_(num_edges), keep_(std::move(keep)), per_edge_(num_edges) {
  normalize(keep_);
  keep_mask_ = EdgeMask(num_edges, keep_);
}

bool PathConstraintSet::add(Path p) {
  if (std::find(paths_.begin(), paths_.end(), p) != paths_.end()) return false;
  const bool cuttable =
      std::any_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return !keep_mask_.test(e); });
  if (!cuttable) throw InfeasibleCover("competing path has every edge protected");
  const int id = static_cast<int>(paths_.size());
  for (EdgeId e : p.edges) {
    if (!keep_mask_.test(e)) per_edge_[e].push_back(id);
  }
  paths_.push_back(std::move(p));
  return true;
}

void PathConstraintSet::truncate(std::size_t size) {
  if (size >= paths_.size()) return;
  paths_.resize(size);
  const int limit = static_cast<int>(size);
  for (auto& ids : per_edge_) {
    ids.erase(std::remove_if(ids.begin(), ids.end(), [&](int id) { return id >= limit; }), ids.end());
  }
}

std::vector<std::vector<EdgeId>> PathConstraintSet::rows() const {
  std::vector<std::vector<EdgeId>> out;
  out.reserve(paths_.size());
  for (const Path& p : paths_) {
    std::vector<EdgeId> row;
    for (EdgeId e : p.edges) {
      if (!keep_mask_.test(e)) row.push_back(e);
    }
    normalize(row);
    out.push_back(std::move(row));
  }
  return out;
}

bool PathConstraintSet::covered_by(const EdgeSet& cut) const {
  const EdgeMask mask(num_edges_, cut);
  return std::all_of(paths_.begin(), paths_.end(), [&](const Path& p) {
    return std::any_of(p.edges.begin(), p.edges.end(), [&](EdgeId e) { return mask.test(e); });
  });
}

double harmonic(std::size_t k) {
  double h = 0.0;
  for (std::size_t n = 1; n <= k; ++n) h += 1.0 / static_cast<double>(n);
  return h;
}

CoverResult greedy_cover(const std::vector<double>& costs, const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(costs.size());
  std::vector<std::vector<int>> through(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw InfeasibleCover("row " + std::to_string(r) + " has no cuttable element");
    for (int e : rows[r]) through.at(e).push_back(static_cast<int>(r));
  }
  std::vector<int> uncut(n, 0);
  std::vector<int> active;
  for (int e = 0; e < n; ++e) {
    uncut[e] = static_cast<int>(through[e].size());
    if (uncut[e] > 0) active.push_back(e);
  }
  std::vector<std::uint8_t> row_cut(rows.size(), 0);
  std::size_t remaining = rows.size();
  CoverResult res;
  while (remaining > 0) {
    int best = -1;
    for (int e : active) {
      if (uncut[e] == 0) continue;
      if (best < 0) {
        best = e;
        continue;
      }
      const double ce = costs[e];
      const double cb = costs[best];
      bool better;
      if (ce == 0.0 && cb == 0.0) {
        better = uncut[e] > uncut[best];
      } else if (ce == 0.0 || cb == 0.0) {
        better = ce == 0.0;
      } else {
        better = uncut[e] * cb > uncut[best] * ce;
      }
      if (better) best = e;
    }
    res.cut_edges.push_back(best);
    for (int r : through[best]) {
      if (row_cut[r]) continue;
      row_cut[r] = 1;
      --remaining;
      for (int e : rows[r]) --uncut[e];
    }
  }
  normalize(res.cut_edges);
  for (int e : res.cut_edges) res.total_cost += costs[e];
  res.trials = 1;
  return res;
}

CoverResult rand_cover(const std::vector<double>& costs, const std::vector<std::vector<int>>& rows,
                       std::uint64_t seed, const RandCoverOptions& options) {
  CoverResult res;
  if (rows.empty()) {
    res.trials = 0;
    res.lp_objective = 0.0;
    return res;
  }
  const int n = static_cast<int>(costs.size());
  const LPSolution lp = solve_cover_lp(costs, rows, {});
  if (lp.status != LpStatus::kOptimal) throw InfeasibleCover("covering relaxation has no solution");

  std::vector<double> delta = lp.values;
  for (double& d : delta) {
    if (d < 1e-9) d = 0.0;
    if (d > 1.0 - 1e-9) d = 1.0;
  }
  const double log_term = std::log(4.0 * static_cast<double>(rows.size()));
  const int draws = static_cast<int>(std::ceil(log_term));
  const double factor = 4.0 * log_term;
  const double budget = factor * lp.objective_value;
  const double slack = 1e-9 * std::max(1.0, budget);
  res.lp_objective = lp.objective_value;
  res.bound_factor = factor;
  res.prose_factor = log_term;

  int cap = options.trials_cap;
  if (cap <= 0) cap = 64 * static_cast<int>(std::ceil(std::log2(std::max(2, n))));
  Rng rng(seed);
  std::vector<std::uint8_t> chosen(n);
  for (int trial = 1; trial <= cap; ++trial) {
    std::fill(chosen.begin(), chosen.end(), 0);
    double cost = 0.0;
    for (int e = 0; e < n; ++e) {
      if (delta[e] == 0.0) continue;
      bool hit = false;
      for (int k = 0; k < draws; ++k) hit = bernoulli(rng, delta[e]) || hit;
      if (hit) {
        chosen[e] = 1;
        cost += costs[e];
      }
    }
    const bool covers = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return row_hit(r, chosen); });
    if (cost <= budget + slack && covers) {
      for (int e = 0; e < n; ++e) {
        if (chosen[e]) {
          res.cut_edges.push_back(e);
          res.total_cost += costs[e];
        }
      }
      res.trials = trial;
      return res;
    }
  }
  throw ResourceExhausted("randomized rounding exceeded " + std::to_string(cap) + " trials");
}

CoverResult greedy_path_cover(const Graph& g, const PathConstraintSet& pcs) {
  return greedy_cover(edge_costs(g), pcs.rows());
}

CoverResult rand_path_cover(const Graph& g, const PathConstraintSet& pcs, std::uint64_t seed,
                            const RandCoverOptions& options) {
  return rand_cover(edge_costs(g), pcs.rows(), seed, options);
}

}  // namespace pathattack
