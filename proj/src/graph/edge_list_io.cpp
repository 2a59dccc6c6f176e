#include "pathattack/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "pathattack/errors.hpp"

namespace pathattack {
namespace {

double parse_number(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "not a number: '" + token + "'");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string format_number(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

struct Builder {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<EdgeSpec> specs;
  std::vector<std::size_t> spec_lines;

  NodeId id_of(const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  }

  void add(const std::string& u, const std::string& v, double weight, double cost, std::size_t line) {
    if (weight < 0.0 || cost < 0.0) throw ParseError(line, "negative weight or cost");
    if (u == v) throw ParseError(line, "self-loop at '" + u + "'");
    specs.push_back({id_of(u), id_of(v), weight, cost});
    spec_lines.push_back(line);
  }

  Graph finish(bool directed) {
    try {
      return build_graph(directed, specs, static_cast<int>(labels.size()), labels);
    } catch (const DuplicateEdge& e) {
      // Report the line of the second occurrence.
      std::unordered_map<std::uint64_t, std::size_t> seen;
      for (std::size_t i = 0; i < specs.size(); ++i) {
        NodeId a = specs[i].u;
        NodeId b = specs[i].v;
        if (!directed && a > b) std::swap(a, b);
        const auto key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        if (!seen.emplace(key, i).second) throw ParseError(spec_lines[i], e.what());
      }
      throw;
    }
  }
};

}  // namespace

Graph parse_edge_list(const std::string& text, EdgeListFormat format, bool directed) {
  Builder b;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.rfind("# node ", 0) == 0) {
      b.id_of(trim(line.substr(7)));
      continue;
    }
    if (const auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    std::vector<std::string> fields;
    if (format == EdgeListFormat::kCsv) {
      fields = split_csv(line);
      if (!header_seen) {
        header_seen = true;
        if (fields.size() >= 2 && fields[0] == "u" && fields[1] == "v") continue;
      }
    } else {
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) fields.push_back(tok);
    }
    if (fields.size() < 2 || fields.size() > 4) {
      throw ParseError(line_no, "expected 'u v [weight [cost]]', got '" + line + "'");
    }
    if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty node name");
    double weight = 1.0;
    if (fields.size() >= 3 && !fields[2].empty()) weight = parse_number(fields[2], line_no);
    double cost = weight;
    if (fields.size() == 4 && !fields[3].empty()) cost = parse_number(fields[3], line_no);
    b.add(fields[0], fields[1], weight, cost, line_no);
  }
  return b.finish(directed);
}

Graph load_edge_list(const std::string& path, EdgeListFormat format, bool directed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return parse_edge_list(buf.str(), format, directed);
}

std::string format_edge_list(const Graph& g, EdgeListFormat format) {
  std::ostringstream out;
  const char sep = format == EdgeListFormat::kCsv ? ',' : ' ';
  out << "# " << (g.directed() ? "directed" : "undirected") << ' ' << g.num_nodes() << " nodes "
      << g.num_edges() << " edges\n";
  for (NodeId n = 0; n < g.num_nodes(); ++n) out << "# node " << g.label(n) << '\n';
  if (format == EdgeListFormat::kCsv) out << "u,v,weight,cost\n";
  for (const Edge& e : g.edges()) {
    out << g.label(e.u) << sep << g.label(e.v) << sep << format_number(e.weight) << sep
        << format_number(e.cost) << '\n';
  }
  return out.str();
}

void save_edge_list(const Graph& g, const std::string& path, EdgeListFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_edge_list(g, format);
  if (!out) throw IoError("write failure on '" + path + "'");
}

EdgeListFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".csv") return EdgeListFormat::kCsv;
  return EdgeListFormat::kWhitespace;
}

}  // namespace pathattack
