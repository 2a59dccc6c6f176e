#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pathattack/graph.hpp"

namespace pathattack {

struct GraphModel {
  enum class Kind { kER, kDER, kBA, kWS, kKron, kLattice, kComplete };

  Kind kind = Kind::kER;
  int n = 0;          // ER, DER, BA, WS, COMP
  double p = 0.0;     // ER, DER edge probability
  int m = 1;          // BA edges per new node
  int k = 2;          // WS mean degree (even)
  double beta = 0.0;  // WS rewiring probability
  int scale = 10;     // KRON: 2^scale nodes
  // KRON 2x2 initiator, row-major. The expected number of directed draws is
  // (sum of entries)^scale; the default sum gives about 160K undirected edges
  // at scale 14.
  std::array<double, 4> initiator{0.9, 0.6, 0.6, 0.373};
  int rows = 0;  // LAT
  int cols = 0;

  static GraphModel er(int n, double p) { GraphModel g; g.kind = Kind::kER; g.n = n; g.p = p; return g; }
  static GraphModel der(int n, double p) { GraphModel g; g.kind = Kind::kDER; g.n = n; g.p = p; return g; }
  static GraphModel ba(int n, int m) { GraphModel g; g.kind = Kind::kBA; g.n = n; g.m = m; return g; }
  static GraphModel ws(int n, int k, double beta) {
    GraphModel g; g.kind = Kind::kWS; g.n = n; g.k = k; g.beta = beta; return g;
  }
  static GraphModel kron(int scale) { GraphModel g; g.kind = Kind::kKron; g.scale = scale; return g; }
  static GraphModel lattice(int rows, int cols) {
    GraphModel g; g.kind = Kind::kLattice; g.rows = rows; g.cols = cols; return g;
  }
  static GraphModel complete(int n) { GraphModel g; g.kind = Kind::kComplete; g.n = n; return g; }

  bool directed() const { return kind == Kind::kDER; }
  std::string name() const;
  void validate() const;  // throws InvalidParameter
};

GraphModel::Kind parse_model_kind(const std::string& name);

// Unit weights and costs; deterministic per seed. Throws InvalidParameter.
Graph generate(const GraphModel& model, std::uint64_t seed);

}  // namespace pathattack
