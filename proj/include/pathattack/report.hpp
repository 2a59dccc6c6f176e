#pragma once

#include <string>
#include <vector>

#include "pathattack/experiment.hpp"

namespace pathattack {

struct AlgorithmSummary {
  std::string algorithm;
  int runs = 0;       // results with a cost (ok or timeout)
  int failures = 0;   // any other status
  int invalid = 0;
  int ratio_count = 0;
  double mean_ratio = 0.0;  // cost / baseline cost over trials where both ran
  double stderr_ratio = 0.0;
  double mean_cost = 0.0;
  double mean_wall_time = 0.0;
  int oracle_count = 0;
  int optimal_count = 0;
};

// A trial contributes a ratio when both the algorithm and the baseline have a
// cost and the baseline cost is positive, or both costs are zero (ratio 1).
// Standard error uses the n-1 sample deviation. Algorithms appear in order of
// first appearance.
std::vector<AlgorithmSummary> summarize(const std::vector<TrialRecord>& records, const std::string& baseline);

enum class ReportFormat { kCsv, kJson, kMarkdown };

ReportFormat parse_report_format(const std::string& name);
// ".csv", ".json", ".md"; anything else is markdown.
ReportFormat report_format_for_path(const std::string& path);

// One row per (trial, algorithm); trials without results get one row with an
// empty algorithm. Wall times are left out so that the dump is reproducible.
std::string records_to_csv(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(const std::string& text);

// trial,algorithm,wall_time_seconds
std::string timings_to_csv(const std::vector<TrialRecord>& records);
// Fills wall times into records read back from a dump.
void apply_timings_csv(std::vector<TrialRecord>& records, const std::string& text);

std::string records_to_json(const std::vector<TrialRecord>& records, const std::string& baseline);
std::string summary_markdown(const std::vector<TrialRecord>& records, const std::string& baseline);

std::string render_report(const std::vector<TrialRecord>& records, ReportFormat format,
                          const std::string& baseline);

// Throws InvalidParameter on empty records and IoError on write failure.
void write_report(const std::vector<TrialRecord>& records, ReportFormat format, const std::string& path,
                  const std::string& baseline);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pathattack
