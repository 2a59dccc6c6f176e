#include <algorithm>

#include "pathattack/errors.hpp"
#include "pathattack/lp.hpp"

namespace pathattack {

LPSolution solve_cover_lp(const std::vector<double>& costs,
                          const std::vector<std::vector<EdgeId>>& path_rows, const EdgeSet& keep,
                          const SimplexOptions& options) {
  const int num_edges = static_cast<int>(costs.size());
  // Only edges that appear in some row get a column; the rest stay at 0.
  std::vector<int> column(num_edges, -1);
  std::vector<EdgeId> edge_of;
  LinearProgram lp;
  std::vector<std::vector<std::pair<int, double>>> rows;
  rows.reserve(path_rows.size());
  for (std::size_t r = 0; r < path_rows.size(); ++r) {
    std::vector<EdgeId> edges = path_rows[r];
    normalize(edges);
    std::vector<std::pair<int, double>> coeffs;
    for (EdgeId e : edges) {
      if (e < 0 || e >= num_edges) throw InvalidParameter("path row references unknown edge");
      if (contains(keep, e)) continue;
      if (column[e] < 0) {
        column[e] = lp.add_var(costs[e], 0.0, 1.0, false, "d" + std::to_string(e));
        edge_of.push_back(e);
      }
      coeffs.emplace_back(column[e], 1.0);
    }
    if (coeffs.empty()) {
      throw InfeasibleCover("path row " + std::to_string(r) + " has every edge protected");
    }
    rows.push_back(std::move(coeffs));
  }
  for (auto& coeffs : rows) lp.add_ge(std::move(coeffs), 1.0);

  LPSolution local = solve(lp, options);
  LPSolution out;
  out.status = local.status;
  out.iterations = local.iterations;
  if (local.status != LpStatus::kOptimal) return out;
  out.values.assign(num_edges, 0.0);
  for (std::size_t c = 0; c < edge_of.size(); ++c) out.values[edge_of[c]] = local.values[c];
  out.objective_value = 0.0;
  for (int e = 0; e < num_edges; ++e) out.objective_value += costs[e] * out.values[e];
  return out;
}

}  // namespace pathattack
