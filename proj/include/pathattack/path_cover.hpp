#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathattack/graph.hpp"
#include "pathattack/paths.hpp"

namespace pathattack {

// Competing paths that must each lose at least one edge, with the inverse
// index from edge to the paths through it. Protected edges are left out of
// the index.
class PathConstraintSet {
 public:
  PathConstraintSet(int num_edges, EdgeSet keep);

  // Adds a path; returns false when it is already present. Throws
  // InfeasibleCover when every edge of the path is protected.
  bool add(Path p);
  // Drops paths added after the first `size` ones.
  void truncate(std::size_t size);

  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }
  const std::vector<Path>& paths() const { return paths_; }
  const EdgeSet& keep() const { return keep_; }
  int num_edges() const { return num_edges_; }
  // Ids of the paths that contain e (empty for protected edges).
  const std::vector<int>& paths_through(EdgeId e) const { return per_edge_[e]; }
  // Cuttable edges of each path, for the covering program.
  std::vector<std::vector<EdgeId>> rows() const;

  bool covered_by(const EdgeSet& cut) const;

 private:
  int num_edges_;
  EdgeSet keep_;
  EdgeMask keep_mask_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> per_edge_;
};

struct CoverResult {
  EdgeSet cut_edges;
  double total_cost = 0.0;
  int trials = 1;
  std::optional<double> lp_objective;
  // Acceptance factor of the rounding loop, 4 ln(4|P|), and the weaker
  // ln(4|P|) quoted in prose; both recorded for the rand engine.
  std::optional<double> bound_factor;
  std::optional<double> prose_factor;
};

// Harmonic number H_k.
double harmonic(std::size_t k);

struct RandCoverOptions {
  int trials_cap = 0;  // 0 picks 64 * ceil(log2 of the element count)
};

// Cover engines over generic elements 0..costs.size()-1; every row lists the
// elements that cut it. The graph forms below feed edge costs and rows.
CoverResult greedy_cover(const std::vector<double>& costs, const std::vector<std::vector<int>>& rows);
CoverResult rand_cover(const std::vector<double>& costs, const std::vector<std::vector<int>>& rows,
                       std::uint64_t seed, const RandCoverOptions& options = {});

// Repeatedly cuts the edge maximizing (uncut paths through it) / cost. Zero-
// cost edges rank above every positive-cost edge; ties go to the lower id.
CoverResult greedy_path_cover(const Graph& g, const PathConstraintSet& pcs);

// Solves the relaxed covering program, then rounds: each edge draws
// ceil(ln(4|P|)) Bernoulli(delta_e) variables and is cut when any succeeds.
// Rounds again until every path is cut and the cost is at most
// 4 ln(4|P|) times the fractional optimum. Throws InfeasibleCover and
// ResourceExhausted.
CoverResult rand_path_cover(const Graph& g, const PathConstraintSet& pcs, std::uint64_t seed,
                            const RandCoverOptions& options = {});

}  // namespace pathattack
