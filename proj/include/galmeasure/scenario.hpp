#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmeasure/counting.hpp"
#include "galmeasure/lattice.hpp"

namespace galmeas {

struct TargetClass {
    std::string name;
    int node = 0;      // canonical lattice node of the declared representative
    int class_id = 0;  // its conjugacy class
};

// Group image of a Galois cover datum: ambient group G, normal subgroup G0
// (the geometric part), an optional complement realizing a splitting of
// G -> G/G0, and named target subgroup classes. All measure operations
// consume a validated scenario.
class CoverScenario {
public:
    static CoverScenario make(std::string id, GroupPtr G, const std::vector<int>& g0_gens,
                              const std::optional<std::vector<int>>& complement_gens,
                              const std::vector<std::pair<std::string, std::vector<int>>>& targets,
                              const Limits& limits = {});

    const std::string& id() const noexcept { return id_; }
    const GroupPtr& group() const noexcept { return G_; }
    const Subgroup& g0() const noexcept { return g0_; }
    const std::optional<Subgroup>& complement() const noexcept { return complement_; }
    bool split() const noexcept { return complement_.has_value(); }
    const LatticePtr& lattice() const noexcept { return lattice_; }
    const std::vector<TargetClass>& targets() const noexcept { return targets_; }
    const TargetClass& target(const std::string& name) const;
    bool has_target(const std::string& name) const;

    // D * G0 = G for the node's subgroup (class-invariant).
    bool node_regular(int node) const;

    // Natural projection G -> Q = G/G0.
    const Epimorphism& to_quotient() const noexcept { return quotient_; }

    // Scenario with the same group data but different target list.
    CoverScenario with_targets(
        const std::vector<std::pair<std::string, std::vector<int>>>& targets,
        const Limits& limits = {}) const;

private:
    CoverScenario() = default;

    std::string id_;
    GroupPtr G_;
    Subgroup g0_;
    std::optional<Subgroup> complement_;
    std::vector<TargetClass> targets_;
    LatticePtr lattice_;
    Epimorphism quotient_;
    std::vector<int> g0_gens_, complement_gens_;
};

// A pair of scenarios joined by a restriction epimorphism (upper onto lower)
// that maps upper.G0 into lower.G0.
struct TowerScenario {
    std::string id;
    CoverScenario upper;
    CoverScenario lower;
    Epimorphism restriction;
};

TowerScenario make_tower(std::string id, CoverScenario upper, CoverScenario lower,
                         Epimorphism restriction);

}  // namespace galmeas
