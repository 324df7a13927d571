#pragma once

#include <string>

#include <json.hpp>

#include "galmeasure/scenario_doc.hpp"

namespace galmeas {

// Scenario file format, version "1": UTF-8 JSON, permutations as arrays of
// 0-based images, subgroups given by generators only.
ScenarioDoc parse_scenario_json(const nlohmann::json& j);
ScenarioDoc parse_scenario_text(const std::string& text);
ScenarioDoc load_scenario_file(const std::string& path);

nlohmann::json scenario_to_json(const ScenarioDoc& doc);
std::string canonical_scenario_text(const ScenarioDoc& doc);  // sorted keys, 2-space indent

}  // namespace galmeas
