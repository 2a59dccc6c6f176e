#include "pathattack/incidence.hpp"

#include "pathattack/errors.hpp"

namespace pathattack {

IncidenceMatrix::IncidenceMatrix(const Graph& g) : rows_(g.num_nodes()) {
  tail_.reserve(g.num_edges());
  head_.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    // build_graph already stores undirected edges with u < v.
    tail_.push_back(e.u);
    head_.push_back(e.v);
  }
}

std::vector<std::int8_t> IncidenceMatrix::dense() const {
  std::vector<std::int8_t> m(static_cast<std::size_t>(rows_) * cols(), 0);
  for (int c = 0; c < cols(); ++c) {
    m[static_cast<std::size_t>(tail_[c]) * cols() + c] = -1;
    m[static_cast<std::size_t>(head_[c]) * cols() + c] = 1;
  }
  return m;
}

std::vector<std::int8_t> IncidenceMatrix::abs_view() const {
  auto m = dense();
  for (auto& v : m) v = static_cast<std::int8_t>(v < 0 ? -v : v);
  return m;
}

IncidenceMatrix incidence(const Graph& g) {
  if (g.num_nodes() == 0) throw EmptyGraph("incidence matrix of an empty graph");
  return IncidenceMatrix(g);
}

}  // namespace pathattack
