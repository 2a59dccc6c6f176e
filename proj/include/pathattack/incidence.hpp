#pragma once

#include <cstdint>
#include <vector>

#include "pathattack/graph.hpp"

namespace pathattack {

// Node-by-edge incidence matrix. Column e holds -1 at the tail of e and +1 at
// its head; undirected edges are oriented from the lower to the higher node id.
// Stored by column since every column has exactly two nonzeros.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const Graph& g);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(tail_.size()); }

  int entry(NodeId row, EdgeId col) const {
    if (row == tail_[col]) return -1;
    if (row == head_[col]) return 1;
    return 0;
  }
  int abs_entry(NodeId row, EdgeId col) const { return entry(row, col) != 0 ? 1 : 0; }

  NodeId tail(EdgeId col) const { return tail_[col]; }
  NodeId head(EdgeId col) const { return head_[col]; }

  // Row-major dense copies.
  std::vector<std::int8_t> dense() const;
  std::vector<std::int8_t> abs_view() const;

 private:
  int rows_;
  std::vector<NodeId> tail_;
  std::vector<NodeId> head_;
};

// Throws EmptyGraph when g has no nodes.
IncidenceMatrix incidence(const Graph& g);

}  // namespace pathattack
