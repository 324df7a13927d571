#include "galmeasure/scenario.hpp"

#include <algorithm>

namespace galmeas {

CoverScenario CoverScenario::make(std::string id, GroupPtr G, const std::vector<int>& g0_gens,
                                  const std::optional<std::vector<int>>& complement_gens,
                                  const std::vector<std::pair<std::string, std::vector<int>>>& targets,
                                  const Limits& limits) {
    CoverScenario s;
    s.id_ = std::move(id);
    s.G_ = G;
    s.lattice_ = SubgroupLattice::build(G, limits);
    s.g0_gens_ = g0_gens;

    s.g0_ = subgroup_generated(G, g0_gens);
    if (!is_normal(*G, s.g0_)) fail("NotNormal", "G0 is not a normal subgroup of G");

    if (complement_gens) {
        s.complement_gens_ = *complement_gens;
        Subgroup C = subgroup_generated(G, *complement_gens);
        if (C.members.intersect(s.g0_.members).count() != 1)
            fail("BadComplement", "complement meets G0 beyond the identity");
        if (product_set_order(C, s.g0_) != G->order())
            fail("BadComplement", "complement and G0 do not generate G");
        s.complement_ = std::move(C);
    }

    if (targets.empty()) fail("NotRegularTarget", "scenario needs at least one target class");
    for (const auto& [name, gens] : targets) {
        Subgroup H = subgroup_generated(G, gens);
        if (product_set_order(H, s.g0_) != G->order())
            fail("NotRegularTarget",
                 "target '" + name + "' does not project onto the quotient (H*G0 != G)");
        int node = s.lattice_->node_of(H);
        TargetClass tc{name, node, s.lattice_->class_of(node)};
        for (const auto& prev : s.targets_) {
            if (prev.name == name)
                fail("DuplicateTarget", "target name '" + name + "' appears twice");
            if (prev.class_id == tc.class_id)
                fail("DuplicateTarget", "targets '" + prev.name + "' and '" + name +
                                            "' denote the same conjugacy class");
        }
        s.targets_.push_back(std::move(tc));
    }

    s.quotient_ = quotient_map(G, s.g0_);
    return s;
}

const TargetClass& CoverScenario::target(const std::string& name) const {
    for (const auto& t : targets_)
        if (t.name == name) return t;
    fail("NotRegularTarget", "unknown target '" + name + "'");
}

bool CoverScenario::has_target(const std::string& name) const {
    return std::any_of(targets_.begin(), targets_.end(),
                       [&](const TargetClass& t) { return t.name == name; });
}

bool CoverScenario::node_regular(int node) const {
    return product_set_order(lattice_->node(node), g0_) == G_->order();
}

CoverScenario CoverScenario::with_targets(
    const std::vector<std::pair<std::string, std::vector<int>>>& targets,
    const Limits& limits) const {
    std::optional<std::vector<int>> comp;
    if (complement_) comp = complement_gens_;
    return make(id_, G_, g0_gens_, comp, targets, limits);
}

TowerScenario make_tower(std::string id, CoverScenario upper, CoverScenario lower,
                         Epimorphism restriction) {
    if (restriction.source != upper.group() || restriction.target != lower.group())
        fail("BadTower", "restriction map does not connect the two scenario groups");
    for (int x : upper.g0().member_list)
        if (!lower.g0().contains(restriction.map(x)))
            fail("BadTower", "restriction does not map the upper G0 into the lower G0");
    return TowerScenario{std::move(id), std::move(upper), std::move(lower), std::move(restriction)};
}

}  // namespace galmeas
