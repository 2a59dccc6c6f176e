#include "pathattack/weights.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "pathattack/errors.hpp"
#include "pathattack/random.hpp"

namespace pathattack {

WeightScheme WeightScheme::parse(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw InvalidParameter("empty weight scheme");
  try {
    if (parts[0] == "equal" && parts.size() == 1) return equal();
    if (parts[0] == "poisson" && parts.size() <= 2) {
      return poisson(parts.size() == 2 ? std::stod(parts[1]) : 20.0, seed);
    }
    if (parts[0] == "uniform" && (parts.size() == 1 || parts.size() == 3)) {
      if (parts.size() == 1) return uniform(1, 41, seed);
      return uniform(std::stoi(parts[1]), std::stoi(parts[2]), seed);
    }
  } catch (const std::logic_error&) {
  }
  throw InvalidParameter("bad weight scheme '" + text + "'");
}

std::string WeightScheme::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kEqual:
      out << "equal";
      break;
    case Kind::kPoisson:
      out << "poisson:" << rate;
      break;
    case Kind::kUniform:
      out << "uniform:" << lo << ":" << hi;
      break;
  }
  return out.str();
}

Graph assign_weights(const Graph& g, const WeightScheme& scheme, CostRule costs) {
  const auto m = static_cast<std::size_t>(g.num_edges());
  std::vector<double> w(m, 1.0);
  Rng rng(scheme.seed);
  switch (scheme.kind) {
    case WeightScheme::Kind::kEqual:
      break;
    case WeightScheme::Kind::kPoisson: {
      if (!(scheme.rate > 0.0)) throw InvalidParameter("poisson rate must be positive");
      std::poisson_distribution<long> draw(scheme.rate);
      for (auto& x : w) x = 1.0 + static_cast<double>(draw(rng));
      break;
    }
    case WeightScheme::Kind::kUniform: {
      if (scheme.lo < 0 || scheme.lo > scheme.hi) throw InvalidParameter("bad uniform range");
      std::uniform_int_distribution<int> draw(scheme.lo, scheme.hi);
      for (auto& x : w) x = static_cast<double>(draw(rng));
      break;
    }
  }
  std::vector<double> c(m);
  for (std::size_t i = 0; i < m; ++i) {
    switch (costs) {
      case CostRule::kEqualToWeight:
        c[i] = w[i];
        break;
      case CostRule::kUnit:
        c[i] = 1.0;
        break;
      case CostRule::kKeep:
        c[i] = g.cost(static_cast<EdgeId>(i));
        break;
    }
  }
  return g.with_values(w, c);
}

}  // namespace pathattack
