#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/runner.hpp"

namespace uavhet {

/// Flat JSON object of scenario and plan keys. Missing keys keep their
/// defaults; unknown keys and ill-typed values are Error(kConfig).
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config_file(const std::string& path);

nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// Sets one key without re-validating the whole configuration.
void apply_override(ExperimentConfig& cfg, std::string_view key, const nlohmann::json& value);

std::vector<std::string> config_keys();

void validate(const ExperimentConfig& cfg);

}  // namespace uavhet
