#pragma once

#include <string>

#include "pathattack/experiment.hpp"

namespace pathattack {

// JSON form of ExperimentConfig. Unknown keys are rejected; missing keys
// keep their defaults. Throws ParseError and InvalidParameter.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

// Overlays the keys present in `json_text` on an existing config.
void merge_config(ExperimentConfig& cfg, const std::string& json_text);

}  // namespace pathattack
