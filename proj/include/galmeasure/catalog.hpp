#pragma once

#include <string>
#include <vector>

#include "galmeasure/scenario_doc.hpp"

namespace galmeas {

// Built-in worked examples. Scenario entries are stored as scenario docs so
// they round-trip through the file format; the tower entry is assembled in
// code.
//
//   squares            C2 acting on a quadratic cover; targets trivial/full
//   fifth-root         order-20 Frobenius group, kernel C5, complement C4
//   s5-transposition   S5 cover, regular over the base field
//   wreath-5-2         C5 wr C2, order 50
//   c4-over-c2-tower   C4 level over its C2 quotient
const std::vector<std::string>& catalog_ids();
bool catalog_has(const std::string& id);
bool catalog_is_tower(const std::string& id);
std::string catalog_description(const std::string& id);

ScenarioDoc catalog_doc(const std::string& id);  // scenario entries only
CoverScenario catalog_scenario(const std::string& id, const Limits& limits = {});
TowerScenario catalog_tower(const std::string& id, const Limits& limits = {});

}  // namespace galmeas
