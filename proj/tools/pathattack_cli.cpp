// Command-line front end: graph generation, single attacks, experiment
// batches and report rendering.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pathattack/attack.hpp"
#include "pathattack/baselines.hpp"
#include "pathattack/config.hpp"
#include "pathattack/edge_list_io.hpp"
#include "pathattack/errors.hpp"
#include "pathattack/experiment.hpp"
#include "pathattack/generators.hpp"
#include "pathattack/oracles.hpp"
#include "pathattack/report.hpp"
#include "pathattack/target_cut.hpp"
#include "pathattack/weights.hpp"

namespace pa = pathattack;
using json = nlohmann::ordered_json;

namespace {

struct GraphInput {
  std::string file;
  bool directed = false;
  std::string weights = "keep";
  std::uint64_t weight_seed = 0;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("-g,--graph", in.file, "Edge list (.csv or whitespace)")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--directed", in.directed, "Read edges as directed arcs");
  cmd->add_option("--weights", in.weights, "keep | equal | poisson:RATE | uniform:LO:HI")->capture_default_str();
  cmd->add_option("--weight-seed", in.weight_seed, "Seed for drawn weights");
}

pa::Graph load_graph(const GraphInput& in) {
  pa::Graph g = pa::load_edge_list(in.file, pa::format_for_path(in.file), in.directed);
  if (in.weights != "keep") g = pa::assign_weights(g, pa::WeightScheme::parse(in.weights, in.weight_seed));
  return g;
}

pa::NodeId node_arg(const pa::Graph& g, const std::string& label) {
  auto n = g.node_by_label(label);
  if (!n) throw pa::InvalidParameter("unknown node '" + label + "'");
  return *n;
}

json edges_json(const pa::Graph& g, const pa::EdgeSet& edges) {
  json out = json::array();
  for (pa::EdgeId e : edges) out.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
  return out;
}

json nodes_json(const pa::Graph& g, const std::vector<pa::NodeId>& nodes) {
  json out = json::array();
  for (pa::NodeId n : nodes) out.push_back(g.label(n));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    pa::write_text_file(out_path, j.dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest-path interdiction by edge and node removal"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  std::string model_name = "er";
  pa::GraphModel model;
  std::uint64_t gen_seed = 1;
  std::string gen_weights = "equal";
  std::string gen_out;
  gen->add_option("--model", model_name, "er | der | ba | ws | kron | lat | comp")->capture_default_str();
  gen->add_option("--n", model.n, "Node count");
  gen->add_option("--p", model.p, "Edge probability (er, der)");
  gen->add_option("--m", model.m, "Edges per new node (ba)");
  gen->add_option("--k", model.k, "Mean degree (ws)");
  gen->add_option("--beta", model.beta, "Rewiring probability (ws)");
  gen->add_option("--scale", model.scale, "log2 of the node count (kron)");
  gen->add_option("--rows", model.rows, "Lattice rows");
  gen->add_option("--cols", model.cols, "Lattice columns");
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--weights", gen_weights, "equal | poisson:RATE | uniform:LO:HI")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output path (.csv for CSV)")->required();

  // attack-path
  auto* ap = app.add_subcommand("attack-path", "Make a chosen path the unique shortest path");
  GraphInput ap_graph;
  std::string ap_source, ap_target, ap_path_text, ap_algorithm = "pathattack_rand", ap_out;
  int ap_rank = 0;
  std::uint64_t ap_seed = 1;
  bool ap_nodes = false;
  add_graph_options(ap, ap_graph);
  ap->add_option("-s,--source", ap_source, "Source node label");
  ap->add_option("-t,--target", ap_target, "Destination node label");
  ap->add_option("--rank", ap_rank, "Use the rank-th shortest simple path as p*");
  ap->add_option("--path", ap_path_text, "p* as comma-separated node labels");
  ap->add_option("--algorithm", ap_algorithm,
                 "greedy_cost | greedy_eigenscore | pathattack_greedy | pathattack_rand | brute_force")
      ->capture_default_str();
  ap->add_flag("--remove-nodes", ap_nodes, "Remove nodes instead of edges (cost = degree)");
  ap->add_option("--seed", ap_seed, "Seed for randomized rounding")->capture_default_str();
  ap->add_option("-o,--out", ap_out, "Write the JSON result here instead of stdout");

  // attack-edge / attack-node
  struct TargetArgs {
    GraphInput graph;
    std::string source, target, element, mode = "heuristic", engine = "rand", out;
    std::uint64_t seed = 1;
    pa::TimeLimits limits;
    double eps = -1.0;
  };
  TargetArgs ae, an;
  auto add_target_options = [](CLI::App* cmd, TargetArgs& a, const char* what) {
    add_graph_options(cmd, a.graph);
    cmd->add_option("-s,--source", a.source, "Source node label")->required();
    cmd->add_option("-t,--target", a.target, "Destination node label")->required();
    cmd->add_option(what[0] == 'e' ? "--edge" : "--node", a.element,
                    what[0] == 'e' ? "Target edge as u,v" : "Target node label")
        ->required();
    cmd->add_option("--mode", a.mode, "heuristic | combinatorial | path | brute_force")->capture_default_str();
    cmd->add_option("--engine", a.engine, "Cover engine inside PATHATTACK: greedy | rand")->capture_default_str();
    cmd->add_option("--seed", a.seed, "Seed")->capture_default_str();
    cmd->add_option("--eps", a.eps, "Search tolerance (negative: 1e-6 of total cost)");
    cmd->add_option("--solve-limit", a.limits.per_solve, "Seconds per joint-program solve")->capture_default_str();
    cmd->add_option("--budget-limit", a.limits.per_budget, "Seconds per budget")->capture_default_str();
    cmd->add_option("--total-limit", a.limits.total, "Seconds per search")->capture_default_str();
    cmd->add_option("-o,--out", a.out, "Write the JSON result here instead of stdout");
  };
  auto* aedge = app.add_subcommand("attack-edge", "Force every shortest path through an edge");
  add_target_options(aedge, ae, "edge");
  auto* anode = app.add_subcommand("attack-node", "Force every shortest path through a node");
  add_target_options(anode, an, "node");

  // experiment
  auto* ex = app.add_subcommand("experiment", "Run a seeded batch of trials from a JSON config");
  std::string ex_config;
  std::optional<int> ex_trials, ex_workers, ex_rank, ex_oracle;
  std::optional<std::uint64_t> ex_seed;
  std::optional<std::string> ex_output, ex_problem, ex_weights;
  ex->add_option("-c,--config", ex_config, "JSON config file")->required()->check(CLI::ExistingFile);
  ex->add_option("--trials", ex_trials, "Override trials");
  ex->add_option("--seed", ex_seed, "Override seed");
  ex->add_option("--workers", ex_workers, "Override worker count (default: PATHATTACK_WORKERS or 1)");
  ex->add_option("--rank", ex_rank, "Override p_star_rank");
  ex->add_option("--oracle-max", ex_oracle, "Override oracle_max_elements");
  ex->add_option("--problem", ex_problem, "Override problem: path | edge | node | remove");
  ex->add_option("--weights", ex_weights, "Override weight scheme");
  ex->add_option("-o,--output", ex_output, "Raw CSV dump; timings and summary go next to it");

  // report
  auto* rep = app.add_subcommand("report", "Render a raw dump as csv, json or markdown");
  std::string rep_input, rep_timings, rep_format = "markdown", rep_baseline, rep_out;
  rep->add_option("-i,--input", rep_input, "Raw CSV dump")->required()->check(CLI::ExistingFile);
  rep->add_option("--timings", rep_timings, "Timings CSV (default: <input>.timings.csv when present)");
  rep->add_option("-f,--format", rep_format, "csv | json | markdown")->capture_default_str();
  rep->add_option("--baseline", rep_baseline, "Ratio baseline (default: first algorithm in the dump)");
  rep->add_option("-o,--out", rep_out, "Output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto kind = pa::parse_model_kind(model_name);
      model.kind = kind;
      pa::Graph g = pa::generate(model, gen_seed);
      if (gen_weights != "equal") g = pa::assign_weights(g, pa::WeightScheme::parse(gen_weights, gen_seed + 1));
      pa::save_edge_list(g, gen_out, pa::format_for_path(gen_out));
      std::cerr << "wrote " << g.num_nodes() << " nodes, " << g.num_edges() << " edges to " << gen_out << "\n";
      return 0;
    }

    if (*ap) {
      const pa::Graph g = load_graph(ap_graph);
      pa::Path p_star;
      if (!ap_path_text.empty()) {
        std::vector<pa::NodeId> nodes;
        for (const auto& label : split_list(ap_path_text)) nodes.push_back(node_arg(g, label));
        p_star = pa::make_path(g, nodes);
      } else {
        if (ap_source.empty() || ap_target.empty() || ap_rank < 1) {
          throw pa::InvalidParameter("give --path, or --source, --target and --rank");
        }
        const auto paths = pa::k_shortest_simple_paths(g, node_arg(g, ap_source), node_arg(g, ap_target),
                                                       static_cast<std::size_t>(ap_rank));
        if (static_cast<int>(paths.size()) < ap_rank) throw pa::Exhausted("fewer simple paths than --rank");
        p_star = paths.back();
      }
      json out{{"algorithm", ap_algorithm}, {"p_star", nodes_json(g, p_star.nodes)}, {"p_star_length", p_star.length}};
      if (ap_nodes) {
        std::vector<double> cost(g.num_nodes());
        for (pa::NodeId n = 0; n < g.num_nodes(); ++n) cost[n] = g.degree(n);
        pa::NodeSet removed;
        int iterations = 0;
        if (ap_algorithm == "greedy_cost") {
          const auto sol = pa::greedy_cost_node_baseline(g, p_star, cost);
          removed = sol.cut;
          iterations = sol.iterations;
        } else if (ap_algorithm == "brute_force") {
          removed = pa::brute_force_node_removal(g, p_star, cost).removed;
        } else {
          pa::NodeAttackInstance inst{&g, p_star, cost, {}};
          const auto engine = ap_algorithm == "pathattack_greedy" ? pa::Engine::kGreedy : pa::Engine::kRand;
          const auto r = pa::pathattack_nodes(inst, engine, ap_seed);
          removed = r.cut.cut_edges;
          iterations = r.iterations;
        }
        double total = 0.0;
        for (pa::NodeId n : removed) total += cost[n];
        out["removed_nodes"] = nodes_json(g, removed);
        out["cost"] = total;
        out["iterations"] = iterations;
        out["valid"] = pa::is_valid_node_removal(g, p_star, removed);
      } else {
        pa::EdgeSet cut;
        int iterations = 0;
        if (ap_algorithm == "greedy_cost" || ap_algorithm == "greedy_eigenscore") {
          const auto sol = ap_algorithm == "greedy_cost" ? pa::greedy_cost_baseline(g, p_star)
                                                         : pa::greedy_eigenscore_baseline(g, p_star);
          cut = sol.cut;
          iterations = sol.iterations;
        } else if (ap_algorithm == "brute_force") {
          cut = pa::brute_force_path_cut(g, p_star).cut;
        } else if (ap_algorithm == "pathattack_greedy" || ap_algorithm == "pathattack_rand") {
          pa::PathAttackOptions opt;
          opt.engine = ap_algorithm == "pathattack_greedy" ? pa::Engine::kGreedy : pa::Engine::kRand;
          opt.seed = ap_seed;
          const auto r = pa::pathattack(g, p_star, p_star.edges, opt);
          cut = r.cut.cut_edges;
          iterations = r.iterations;
          out["generated_paths"] = r.generated_paths.size();
          if (r.cut.lp_objective) out["lp_objective"] = *r.cut.lp_objective;
        } else {
          throw pa::InvalidParameter("unknown algorithm '" + ap_algorithm + "'");
        }
        out["cut"] = edges_json(g, cut);
        out["cost"] = pa::total_cost(g, cut);
        out["iterations"] = iterations;
        out["valid"] = pa::is_valid_path_cut(g, p_star, cut);
      }
      emit(out, ap_out);
      return 0;
    }

    if (*aedge || *anode) {
      TargetArgs& a = *aedge ? ae : an;
      const pa::Graph g = load_graph(a.graph);
      pa::TargetCutInstance inst;
      inst.graph = &g;
      inst.s = node_arg(g, a.source);
      inst.t = node_arg(g, a.target);
      if (*aedge) {
        const auto ends = split_list(a.element);
        if (ends.size() != 2) throw pa::InvalidParameter("--edge expects u,v");
        auto e = g.find_edge(node_arg(g, ends[0]), node_arg(g, ends[1]));
        if (!e) throw pa::InvalidParameter("no edge " + a.element);
        inst.target = pa::Target::edge(*e);
      } else {
        inst.target = pa::Target::node(node_arg(g, a.element));
      }
      inst.eps = a.eps;
      inst.limits = a.limits;
      inst.engine = pa::parse_engine(a.engine);
      inst.seed = a.seed;
      const pa::CutSolution sol =
          a.mode == "brute_force" ? pa::brute_force_target_cut(g, inst.s, inst.t, inst.target)
                                  : pa::target_cut_search(inst, pa::parse_mode(a.mode));
      const char* status = sol.status == pa::CutStatus::kSolved          ? "solved"
                           : sol.status == pa::CutStatus::kTimedOut      ? "timed_out"
                                                                         : "no_through_path";
      json out{{"mode", a.mode}, {"status", status}, {"cut", edges_json(g, sol.cut)}, {"cost", sol.cost},
               {"valid", pa::is_valid_target_cut(g, inst.s, inst.t, inst.target, sol.cut)}};
      if (sol.through_path) out["through_path"] = nodes_json(g, sol.through_path->nodes);
      out["iterations"] = sol.iterations;
      out["pathattack_calls"] = sol.pathattack_calls;
      out["joint_solves"] = sol.joint_solves;
      out["b_lower"] = sol.b_lower;
      out["b_upper"] = sol.b_upper;
      out["wall_time_seconds"] = sol.wall_time_seconds;
      emit(out, a.out);
      return 0;
    }

    if (*ex) {
      pa::ExperimentConfig cfg = pa::load_config(ex_config);
      if (ex_trials) cfg.trials = *ex_trials;
      if (ex_seed) cfg.seed = *ex_seed;
      if (ex_workers) cfg.workers = *ex_workers;
      if (ex_rank) cfg.p_star_rank = *ex_rank;
      if (ex_oracle) cfg.oracle_max_elements = *ex_oracle;
      if (ex_problem) cfg.problem = pa::parse_problem(*ex_problem);
      if (ex_weights) cfg.weights = *ex_weights;
      if (ex_output) cfg.output = *ex_output;
      if (cfg.output.empty()) cfg.output = "experiment.csv";
      const auto records = pa::run_experiment(cfg);
      const std::string baseline = pa::baseline_algorithm(cfg.problem);
      pa::write_text_file(cfg.output, pa::records_to_csv(records));
      pa::write_text_file(cfg.output + ".timings.csv", pa::timings_to_csv(records));
      const std::string summary = pa::summary_markdown(records, baseline);
      pa::write_text_file(cfg.output + ".md", summary);
      std::cout << summary;
      return 0;
    }

    if (*rep) {
      auto records = pa::records_from_csv(pa::read_text_file(rep_input));
      if (records.empty()) throw pa::InvalidParameter("dump has no records");
      std::string timings = rep_timings;
      if (timings.empty() && std::filesystem::exists(rep_input + ".timings.csv")) timings = rep_input + ".timings.csv";
      if (!timings.empty()) pa::apply_timings_csv(records, pa::read_text_file(timings));
      std::string baseline = rep_baseline;
      for (const auto& r : records) {
        if (baseline.empty() && !r.results.empty()) baseline = r.results.front().algorithm;
      }
      const auto text = pa::render_report(records, pa::parse_report_format(rep_format), baseline);
      if (rep_out.empty()) {
        std::cout << text;
      } else {
        pa::write_text_file(rep_out, text);
      }
      return 0;
    }
  } catch (const pa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
