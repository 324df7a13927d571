#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmeasure/construct.hpp"
#include "galmeasure/scenario.hpp"

namespace galmeas {

// In-memory mirror of the scenario file format: the group as a construction
// descriptor, subgroups by generator image lists.
struct TargetDoc {
    std::string name;
    std::vector<std::vector<int>> generators;
};

struct ScenarioDoc {
    std::string format_version = "1";
    std::string metadata;
    GroupSpec group;
    std::vector<std::vector<int>> g0;
    std::optional<std::vector<std::vector<int>>> complement;
    std::vector<TargetDoc> targets;
};

// Builds the group and validates the whole scenario.
CoverScenario realize_scenario(const ScenarioDoc& doc, const std::string& id,
                               const Limits& limits = {});

// Element indices of the listed permutations; throws when one is not a group
// member.
std::vector<int> element_indices(const FiniteGroup& G,
                                 const std::vector<std::vector<int>>& perms);

// Rebuilds an epimorphism onto a different (but equal as a permutation group)
// realization of its target.
Epimorphism retarget_epimorphism(const Epimorphism& f, const GroupPtr& new_target);

}  // namespace galmeas
