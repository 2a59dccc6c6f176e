#include "pathattack/config.hpp"

#include <set>

#include "json.hpp"

#include "pathattack/errors.hpp"
#include "pathattack/report.hpp"

namespace pathattack {
namespace {

using json = nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidParameter(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw InvalidParameter("unknown key '" + it.key() + "' in " + where);
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("bad value for '") + key + "': " + e.what());
  }
}

void read_graph(const json& j, GraphSource& src) {
  check_keys(j, {"model", "n", "p", "m", "k", "beta", "scale", "initiator", "rows", "cols", "file", "directed"},
             "graph");
  if (j.contains("model") && j.contains("file")) throw InvalidParameter("graph names both a model and a file");
  if (j.contains("file")) {
    src.model.reset();
    read(j, "file", src.file);
    read(j, "directed", src.directed);
    return;
  }
  GraphModel model = src.model.value_or(GraphModel{});
  if (j.contains("model")) model.kind = parse_model_kind(j.at("model").get<std::string>());
  read(j, "n", model.n);
  read(j, "p", model.p);
  read(j, "m", model.m);
  read(j, "k", model.k);
  read(j, "beta", model.beta);
  read(j, "scale", model.scale);
  read(j, "initiator", model.initiator);
  read(j, "rows", model.rows);
  read(j, "cols", model.cols);
  src.model = model;
  src.file.clear();
}

json graph_to_json(const GraphSource& src) {
  if (!src.model) return {{"file", src.file}, {"directed", src.directed}};
  const GraphModel& m = *src.model;
  json j{{"model", m.name()}};
  switch (m.kind) {
    case GraphModel::Kind::kER:
    case GraphModel::Kind::kDER:
      j["n"] = m.n;
      j["p"] = m.p;
      break;
    case GraphModel::Kind::kBA:
      j["n"] = m.n;
      j["m"] = m.m;
      break;
    case GraphModel::Kind::kWS:
      j["n"] = m.n;
      j["k"] = m.k;
      j["beta"] = m.beta;
      break;
    case GraphModel::Kind::kKron:
      j["scale"] = m.scale;
      j["initiator"] = m.initiator;
      break;
    case GraphModel::Kind::kLattice:
      j["rows"] = m.rows;
      j["cols"] = m.cols;
      break;
    case GraphModel::Kind::kComplete:
      j["n"] = m.n;
      break;
  }
  return j;
}

void apply_json(ExperimentConfig& cfg, const json& j) {
  check_keys(j,
             {"graph", "weights", "trials", "p_star_rank", "problem", "algorithms", "seed", "limits",
              "target_engine", "terminals", "neighborhood_hops", "target_skip", "oracle_max_elements", "workers",
              "output"},
             "config");
  if (j.contains("graph")) read_graph(j.at("graph"), cfg.graph);
  read(j, "weights", cfg.weights);
  read(j, "trials", cfg.trials);
  read(j, "p_star_rank", cfg.p_star_rank);
  if (j.contains("problem")) cfg.problem = parse_problem(j.at("problem").get<std::string>());
  read(j, "algorithms", cfg.algorithms);
  read(j, "seed", cfg.seed);
  if (j.contains("limits")) {
    const json& l = j.at("limits");
    check_keys(l, {"per_solve", "per_budget", "total"}, "limits");
    read(l, "per_solve", cfg.limits.per_solve);
    read(l, "per_budget", cfg.limits.per_budget);
    read(l, "total", cfg.limits.total);
  }
  if (j.contains("target_engine")) cfg.target_engine = parse_engine(j.at("target_engine").get<std::string>());
  if (j.contains("terminals")) {
    const json& t = j.at("terminals");
    check_keys(t, {"rule", "hops"}, "terminals");
    std::string rule = cfg.terminals.kind == TerminalRule::Kind::kUniform ? "uniform" : "hop_distance";
    read(t, "rule", rule);
    if (rule == "uniform") {
      cfg.terminals.kind = TerminalRule::Kind::kUniform;
    } else if (rule == "hop_distance") {
      cfg.terminals.kind = TerminalRule::Kind::kHopDistance;
    } else {
      throw InvalidParameter("unknown terminal rule '" + rule + "'");
    }
    read(t, "hops", cfg.terminals.hops);
  }
  read(j, "neighborhood_hops", cfg.neighborhood_hops);
  read(j, "target_skip", cfg.target_skip);
  read(j, "oracle_max_elements", cfg.oracle_max_elements);
  read(j, "workers", cfg.workers);
  read(j, "output", cfg.output);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

void merge_config(ExperimentConfig& cfg, const std::string& json_text) { apply_json(cfg, parse_json(json_text)); }

ExperimentConfig parse_config(const std::string& json_text) {
  ExperimentConfig cfg;
  merge_config(cfg, json_text);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) { return parse_config(read_text_file(path)); }

std::string config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["graph"] = graph_to_json(cfg.graph);
  j["weights"] = cfg.weights;
  j["trials"] = cfg.trials;
  j["p_star_rank"] = cfg.p_star_rank;
  j["problem"] = problem_name(cfg.problem);
  j["algorithms"] = cfg.algorithms;
  j["seed"] = cfg.seed;
  j["limits"] = {{"per_solve", cfg.limits.per_solve},
                 {"per_budget", cfg.limits.per_budget},
                 {"total", cfg.limits.total}};
  j["target_engine"] = engine_name(cfg.target_engine);
  if (cfg.terminals.kind == TerminalRule::Kind::kUniform) {
    j["terminals"] = {{"rule", "uniform"}};
  } else {
    j["terminals"] = {{"rule", "hop_distance"}, {"hops", cfg.terminals.hops}};
  }
  j["neighborhood_hops"] = cfg.neighborhood_hops;
  j["target_skip"] = cfg.target_skip;
  j["oracle_max_elements"] = cfg.oracle_max_elements;
  j["workers"] = cfg.workers;
  j["output"] = cfg.output;
  return j.dump(2) + "\n";
}

}  // namespace pathattack
