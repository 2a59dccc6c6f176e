#include "pathattack/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <vector>

#include "pathattack/errors.hpp"
#include "pathattack/random.hpp"

namespace pathattack {
namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

// Geometric skipping over the candidate pairs, so sparse graphs cost
// O(n + m) rather than O(n^2).
std::vector<EdgeSpec> gnp(int n, double p, bool directed, Rng& rng) {
  std::vector<EdgeSpec> edges;
  if (p <= 0.0 || n < 2) return edges;
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
        if (u != v) edges.push_back({u, v});
      }
    }
    return edges;
  }
  const double log_q = std::log1p(-p);
  const std::int64_t row = directed ? n - 1 : 0;
  const std::int64_t total = directed ? static_cast<std::int64_t>(n) * (n - 1)
                                      : static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t idx = -1;
  while (true) {
    const double r = uniform01(rng);
    idx += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    if (idx >= total) break;
    NodeId u;
    NodeId v;
    if (directed) {
      u = static_cast<NodeId>(idx / row);
      const auto off = static_cast<NodeId>(idx % row);
      v = off >= u ? off + 1 : off;
    } else {
      // Row u holds pairs (u, u+1..n-1); invert the triangular index.
      const double nn = n;
      auto uu = static_cast<std::int64_t>(
          std::floor((2 * nn - 1 - std::sqrt((2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(idx))) / 2));
      auto start = [&](std::int64_t r0) { return r0 * (2 * static_cast<std::int64_t>(n) - r0 - 1) / 2; };
      while (uu > 0 && start(uu) > idx) --uu;
      while (start(uu + 1) <= idx) ++uu;
      u = static_cast<NodeId>(uu);
      v = static_cast<NodeId>(u + 1 + (idx - start(uu)));
    }
    edges.push_back({u, v});
  }
  return edges;
}

std::vector<EdgeSpec> barabasi_albert(int n, int m, Rng& rng) {
  // Seed graph: star on m + 1 nodes; every later node attaches m edges to
  // distinct targets drawn from the degree-weighted node list.
  std::vector<EdgeSpec> edges;
  std::vector<NodeId> repeated;
  for (NodeId v = 1; v <= m; ++v) {
    edges.push_back({0, v});
    repeated.push_back(0);
    repeated.push_back(v);
  }
  for (NodeId source = m + 1; source < n; ++source) {
    std::set<NodeId> targets;
    while (static_cast<int>(targets.size()) < m) {
      const auto pick = static_cast<std::size_t>(rng() % repeated.size());
      targets.insert(repeated[pick]);
    }
    for (NodeId t : targets) {
      edges.push_back({t, source});
      repeated.push_back(t);
      repeated.push_back(source);
    }
  }
  return edges;
}

std::vector<EdgeSpec> watts_strogatz(int n, int k, double beta, Rng& rng) {
  const int half = k / 2;
  std::unordered_set<std::uint64_t> present;
  auto canon = [](NodeId a, NodeId b) { return a < b ? pair_key(a, b) : pair_key(b, a); };
  std::vector<std::pair<NodeId, NodeId>> ring;
  for (int j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      ring.emplace_back(u, v);
      present.insert(canon(u, v));
    }
  }
  for (auto& [u, v] : ring) {
    if (!bernoulli(rng, beta)) continue;
    // Skip rewiring when u is already adjacent to everything.
    int degree_u = 0;
    for (NodeId w = 0; w < n; ++w) {
      if (w != u && present.count(canon(u, w))) ++degree_u;
    }
    if (degree_u >= n - 1) continue;
    NodeId w;
    do {
      w = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
    } while (w == u || present.count(canon(u, w)));
    present.erase(canon(u, v));
    present.insert(canon(u, w));
    v = w;
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(ring.size());
  for (auto [u, v] : ring) edges.push_back({u, v});
  return edges;
}

std::vector<EdgeSpec> kronecker(int scale, const std::array<double, 4>& init, Rng& rng) {
  double sum = 0.0;
  for (double x : init) sum += x;
  const double expected = std::pow(sum, scale);
  const auto draws = static_cast<std::int64_t>(std::llround(expected));
  std::unordered_set<std::uint64_t> seen;
  std::vector<EdgeSpec> edges;
  for (std::int64_t i = 0; i < draws; ++i) {
    NodeId u = 0;
    NodeId v = 0;
    for (int level = 0; level < scale; ++level) {
      double r = uniform01(rng) * sum;
      int cell = 0;
      while (cell < 3 && r >= init[cell]) {
        r -= init[cell];
        ++cell;
      }
      u = (u << 1) | (cell >> 1);
      v = (v << 1) | (cell & 1);
    }
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(pair_key(u, v)).second) edges.push_back({u, v});
  }
  return edges;
}

}  // namespace

std::string GraphModel::name() const {
  switch (kind) {
    case Kind::kER: return "ER";
    case Kind::kDER: return "DER";
    case Kind::kBA: return "BA";
    case Kind::kWS: return "WS";
    case Kind::kKron: return "KRON";
    case Kind::kLattice: return "LAT";
    case Kind::kComplete: return "COMP";
  }
  return "?";
}

GraphModel::Kind parse_model_kind(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "er") return GraphModel::Kind::kER;
  if (s == "der") return GraphModel::Kind::kDER;
  if (s == "ba") return GraphModel::Kind::kBA;
  if (s == "ws") return GraphModel::Kind::kWS;
  if (s == "kron") return GraphModel::Kind::kKron;
  if (s == "lat") return GraphModel::Kind::kLattice;
  if (s == "comp") return GraphModel::Kind::kComplete;
  throw InvalidParameter("unknown graph model '" + name + "'");
}

void GraphModel::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidParameter(what);
  };
  switch (kind) {
    case Kind::kER:
    case Kind::kDER:
      require(n >= 0, "n must be nonnegative");
      require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
      break;
    case Kind::kBA:
      require(m >= 1, "BA needs m >= 1");
      require(n > m, "BA needs n > m");
      break;
    case Kind::kWS:
      require(k >= 2 && k % 2 == 0, "WS needs an even k >= 2");
      require(n > k, "WS needs n > k");
      require(beta >= 0.0 && beta <= 1.0, "beta must lie in [0,1]");
      break;
    case Kind::kKron:
      require(scale >= 1 && scale <= 30, "KRON scale must lie in [1,30]");
      for (double x : initiator) require(x >= 0.0 && x <= 1.0, "initiator entries must lie in [0,1]");
      break;
    case Kind::kLattice:
      require(rows >= 1 && cols >= 1, "lattice needs positive dimensions");
      break;
    case Kind::kComplete:
      require(n >= 1, "complete graph needs n >= 1");
      break;
  }
}

Graph generate(const GraphModel& model, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  std::vector<EdgeSpec> edges;
  int nodes = model.n;
  switch (model.kind) {
    case GraphModel::Kind::kER:
      edges = gnp(model.n, model.p, false, rng);
      break;
    case GraphModel::Kind::kDER:
      edges = gnp(model.n, model.p, true, rng);
      break;
    case GraphModel::Kind::kBA:
      edges = barabasi_albert(model.n, model.m, rng);
      break;
    case GraphModel::Kind::kWS:
      edges = watts_strogatz(model.n, model.k, model.beta, rng);
      break;
    case GraphModel::Kind::kKron:
      nodes = 1 << model.scale;
      edges = kronecker(model.scale, model.initiator, rng);
      break;
    case GraphModel::Kind::kLattice:
      nodes = model.rows * model.cols;
      for (int r = 0; r < model.rows; ++r) {
        for (int c = 0; c < model.cols; ++c) {
          const NodeId id = r * model.cols + c;
          if (c + 1 < model.cols) edges.push_back({id, id + 1});
          if (r + 1 < model.rows) edges.push_back({id, id + model.cols});
        }
      }
      break;
    case GraphModel::Kind::kComplete:
      edges = gnp(model.n, 1.0, false, rng);
      break;
  }
  return build_graph(model.directed(), edges, nodes);
}

}  // namespace pathattack
