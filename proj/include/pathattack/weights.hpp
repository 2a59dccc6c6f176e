#pragma once

#include <cstdint>
#include <string>

#include "pathattack/graph.hpp"

namespace pathattack {

struct WeightScheme {
  enum class Kind { kEqual, kPoisson, kUniform };

  Kind kind = Kind::kEqual;
  double rate = 20.0;  // poisson: w = 1 + Poisson(rate)
  int lo = 1;          // uniform: integers in [lo, hi]
  int hi = 41;
  std::uint64_t seed = 0;

  static WeightScheme equal() { return {}; }
  static WeightScheme poisson(double rate, std::uint64_t seed) {
    return {Kind::kPoisson, rate, 1, 41, seed};
  }
  static WeightScheme uniform(int lo, int hi, std::uint64_t seed) {
    return {Kind::kUniform, 20.0, lo, hi, seed};
  }

  // "equal", "poisson:20", "uniform:1:41".
  static WeightScheme parse(const std::string& text, std::uint64_t seed);
  std::string to_string() const;
};

enum class CostRule { kEqualToWeight, kUnit, kKeep };

// Draws new weights in edge-id order. Costs follow `costs` (equal to the new
// weights by default).
Graph assign_weights(const Graph& g, const WeightScheme& scheme,
                     CostRule costs = CostRule::kEqualToWeight);

}  // namespace pathattack
