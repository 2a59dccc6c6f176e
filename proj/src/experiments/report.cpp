#include "pathattack/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "pathattack/errors.hpp"

namespace pathattack {
namespace {

std::string num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

double parse_double(const std::string& s, std::size_t line) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "bad number '" + s + "'");
  return x;
}

long long parse_int(const std::string& s, std::size_t line) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "bad integer '" + s + "'");
  return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool has_cost(const AlgorithmResult& r) { return r.status == "ok" || r.status == "timeout"; }

std::string clean(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = '_';
  }
  return s;
}

constexpr const char* kCsvHeader =
    "trial,graph,trial_status,s,t,p_star_length,p_star_hops,target,oracle_cost,algorithm,status,cost,"
    "iterations,valid,optimal";

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

}  // namespace

std::vector<AlgorithmSummary> summarize(const std::vector<TrialRecord>& records, const std::string& baseline) {
  std::vector<AlgorithmSummary> out;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<double>> ratios;
  std::vector<double> cost_sum;
  std::vector<double> time_sum;
  auto slot = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, out.size());
    if (inserted) {
      out.push_back({});
      out.back().algorithm = name;
      ratios.emplace_back();
      cost_sum.push_back(0.0);
      time_sum.push_back(0.0);
    }
    return it->second;
  };
  for (const auto& rec : records) {
    const AlgorithmResult* base = nullptr;
    for (const auto& r : rec.results) {
      if (r.algorithm == baseline && has_cost(r)) base = &r;
    }
    for (const auto& r : rec.results) {
      const std::size_t i = slot(r.algorithm);
      AlgorithmSummary& s = out[i];
      if (r.status == "invalid") ++s.invalid;
      if (!has_cost(r)) {
        ++s.failures;
        continue;
      }
      ++s.runs;
      cost_sum[i] += r.cost;
      time_sum[i] += r.wall_time_seconds;
      if (r.optimal) {
        ++s.oracle_count;
        if (*r.optimal) ++s.optimal_count;
      }
      if (base) {
        if (base->cost > 0.0) {
          ratios[i].push_back(r.cost / base->cost);
        } else if (r.cost == 0.0) {
          ratios[i].push_back(1.0);
        }
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    AlgorithmSummary& s = out[i];
    if (s.runs > 0) {
      s.mean_cost = cost_sum[i] / s.runs;
      s.mean_wall_time = time_sum[i] / s.runs;
    }
    const auto& r = ratios[i];
    s.ratio_count = static_cast<int>(r.size());
    if (r.empty()) continue;
    double sum = 0.0;
    for (double x : r) sum += x;
    s.mean_ratio = sum / r.size();
    if (r.size() > 1) {
      double ss = 0.0;
      for (double x : r) ss += (x - s.mean_ratio) * (x - s.mean_ratio);
      s.stderr_ratio = std::sqrt(ss / (r.size() - 1)) / std::sqrt(static_cast<double>(r.size()));
    }
  }
  return out;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw InvalidParameter("unknown report format '" + name + "'");
}

ReportFormat report_format_for_path(const std::string& path) {
  auto ends = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".csv")) return ReportFormat::kCsv;
  if (ends(".json")) return ReportFormat::kJson;
  return ReportFormat::kMarkdown;
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& rec : records) {
    std::ostringstream prefix;
    prefix << rec.trial << ',' << clean(rec.graph_id) << ',' << rec.status << ',' << rec.s << ',' << rec.t << ','
           << num(rec.p_star_length) << ',' << rec.p_star_hops << ',' << rec.target << ','
           << (rec.oracle_cost ? num(*rec.oracle_cost) : "") << ',';
    if (rec.results.empty()) {
      out << prefix.str() << ",,,,,\n";
      continue;
    }
    for (const auto& r : rec.results) {
      out << prefix.str() << r.algorithm << ',' << r.status << ',' << num(r.cost) << ',' << r.iterations << ','
          << (r.valid ? 1 : 0) << ',' << (r.optimal ? (*r.optimal ? "1" : "0") : "") << '\n';
    }
  }
  return out.str();
}

std::vector<TrialRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<TrialRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kCsvHeader) throw ParseError(line_no, "unexpected header");
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 15) throw ParseError(line_no, "expected 15 fields");
    const int trial = static_cast<int>(parse_int(f[0], line_no));
    if (records.empty() || records.back().trial != trial) {
      TrialRecord rec;
      rec.trial = trial;
      rec.graph_id = f[1];
      rec.status = f[2];
      rec.s = static_cast<NodeId>(parse_int(f[3], line_no));
      rec.t = static_cast<NodeId>(parse_int(f[4], line_no));
      rec.p_star_length = parse_double(f[5], line_no);
      rec.p_star_hops = static_cast<int>(parse_int(f[6], line_no));
      rec.target = static_cast<std::int32_t>(parse_int(f[7], line_no));
      if (!f[8].empty()) rec.oracle_cost = parse_double(f[8], line_no);
      records.push_back(std::move(rec));
    }
    if (f[9].empty()) continue;
    AlgorithmResult r;
    r.algorithm = f[9];
    r.status = f[10];
    r.cost = parse_double(f[11], line_no);
    r.iterations = static_cast<int>(parse_int(f[12], line_no));
    r.valid = f[13] == "1";
    if (!f[14].empty()) r.optimal = f[14] == "1";
    records.back().results.push_back(std::move(r));
  }
  return records;
}

std::string timings_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "trial,algorithm,wall_time_seconds\n";
  for (const auto& rec : records) {
    for (const auto& r : rec.results) out << rec.trial << ',' << r.algorithm << ',' << num(r.wall_time_seconds) << '\n';
  }
  return out.str();
}

void apply_timings_csv(std::vector<TrialRecord>& records, const std::string& text) {
  std::map<std::pair<int, std::string>, double> times;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 || line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 3) throw ParseError(line_no, "expected 3 fields");
    times[{static_cast<int>(parse_int(f[0], line_no)), f[1]}] = parse_double(f[2], line_no);
  }
  for (auto& rec : records) {
    for (auto& r : rec.results) {
      auto it = times.find({rec.trial, r.algorithm});
      if (it != times.end()) r.wall_time_seconds = it->second;
    }
  }
}

std::string records_to_json(const std::vector<TrialRecord>& records, const std::string& baseline) {
  nlohmann::ordered_json doc;
  doc["baseline"] = baseline;
  auto& summary = doc["summary"] = nlohmann::ordered_json::array();
  for (const auto& s : summarize(records, baseline)) {
    summary.push_back({{"algorithm", s.algorithm},
                       {"runs", s.runs},
                       {"failures", s.failures},
                       {"invalid", s.invalid},
                       {"ratio_count", s.ratio_count},
                       {"mean_ratio", s.mean_ratio},
                       {"stderr_ratio", s.stderr_ratio},
                       {"mean_cost", s.mean_cost},
                       {"mean_wall_time", s.mean_wall_time},
                       {"oracle_count", s.oracle_count},
                       {"optimal_count", s.optimal_count}});
  }
  auto& trials = doc["trials"] = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json t{{"trial", rec.trial},
                             {"graph", rec.graph_id},
                             {"status", rec.status},
                             {"s", rec.s},
                             {"t", rec.t},
                             {"p_star_length", rec.p_star_length},
                             {"p_star_hops", rec.p_star_hops},
                             {"target", rec.target}};
    t["oracle_cost"] = rec.oracle_cost ? nlohmann::ordered_json(*rec.oracle_cost) : nlohmann::ordered_json();
    auto& results = t["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rec.results) {
      nlohmann::ordered_json j{{"algorithm", r.algorithm}, {"status", r.status},   {"cost", r.cost},
                               {"iterations", r.iterations}, {"valid", r.valid},
                               {"wall_time_seconds", r.wall_time_seconds}};
      j["optimal"] = r.optimal ? nlohmann::ordered_json(*r.optimal) : nlohmann::ordered_json();
      results.push_back(std::move(j));
    }
    trials.push_back(std::move(t));
  }
  return doc.dump(2) + "\n";
}

std::string summary_markdown(const std::vector<TrialRecord>& records, const std::string& baseline) {
  int ok = 0;
  for (const auto& rec : records) ok += rec.status == "ok" ? 1 : 0;
  std::ostringstream out;
  out << "# Experiment summary\n\n";
  out << "Trials: " << records.size() << " (" << ok << " ran). Cost ratios are relative to `" << baseline
      << "`.\n\n";
  out << "| algorithm | runs | failures | invalid | mean cost ratio | std. error | mean cost | mean wall time (s) "
         "| optimal |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& s : summarize(records, baseline)) {
    out << "| " << s.algorithm << " | " << s.runs << " | " << s.failures << " | " << s.invalid << " | "
        << (s.ratio_count ? fixed(s.mean_ratio, 4) : "n/a") << " | "
        << (s.ratio_count ? fixed(s.stderr_ratio, 4) : "n/a") << " | " << fixed(s.mean_cost, 3) << " | "
        << fixed(s.mean_wall_time, 4) << " | "
        << (s.oracle_count ? std::to_string(s.optimal_count) + "/" + std::to_string(s.oracle_count) : "n/a")
        << " |\n";
  }
  std::map<std::string, int> statuses;
  for (const auto& rec : records) {
    if (rec.status != "ok") ++statuses[rec.status];
  }
  if (!statuses.empty()) {
    out << "\nSkipped trials:";
    for (const auto& [status, count] : statuses) out << ' ' << status << '=' << count;
    out << "\n";
  }
  return out.str();
}

std::string render_report(const std::vector<TrialRecord>& records, ReportFormat format,
                          const std::string& baseline) {
  switch (format) {
    case ReportFormat::kCsv:
      return records_to_csv(records);
    case ReportFormat::kJson:
      return records_to_json(records, baseline);
    case ReportFormat::kMarkdown:
      return summary_markdown(records, baseline);
  }
  return {};
}

void write_report(const std::vector<TrialRecord>& records, ReportFormat format, const std::string& path,
                  const std::string& baseline) {
  if (records.empty()) throw InvalidParameter("no records to report");
  write_text_file(path, render_report(records, format, baseline));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace pathattack
