#pragma once

#include <string>

#include "pathattack/graph.hpp"

namespace pathattack {

enum class EdgeListFormat {
  kWhitespace,  // "u v [weight [cost]]", '#' starts a comment
  kCsv,         // header "u,v,weight,cost"; weight and cost columns optional
};

// Missing weight defaults to 1 and missing cost to the weight. Node names are
// kept as labels. Throws ParseError (with 1-based line number) and IoError.
Graph load_edge_list(const std::string& path, EdgeListFormat format = EdgeListFormat::kWhitespace,
                     bool directed = false);
Graph parse_edge_list(const std::string& text, EdgeListFormat format = EdgeListFormat::kWhitespace,
                      bool directed = false);

// Writes every edge with explicit weight and cost at round-trip precision.
// Isolated nodes are listed on "# node <label>" lines so they survive loading.
void save_edge_list(const Graph& g, const std::string& path,
                    EdgeListFormat format = EdgeListFormat::kWhitespace);
std::string format_edge_list(const Graph& g, EdgeListFormat format = EdgeListFormat::kWhitespace);

// Picks the format from the extension: ".csv" means CSV, anything else
// whitespace.
EdgeListFormat format_for_path(const std::string& path);

}  // namespace pathattack
