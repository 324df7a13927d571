#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmeasure/measure.hpp"

namespace galmeas {

// Sylow and embedding choices for the pro-p measure. Defaults are canonical:
// the first Sylow node in lattice order and, per target, the first node
// inside it conjugate to the declared representative.
struct PropChoices {
    std::optional<Subgroup> sylow;                  // subgroup of the scenario group
    std::optional<std::vector<Subgroup>> embedded;  // aligned with the requested targets
};

// Measure computed inside a p-Sylow subgroup S: the numerator counts tuples
// in S^e generating a subgroup S-conjugate to the embedded target, the
// denominator counts tuples whose subgroup fills S over S ∩ G0.
// Preconditions: G/G0 and every requested target are p-groups.
// `target_names` empty means every declared target.
MeasureReport prop_measure_at(const CoverScenario& s, long long p, int e,
                              std::vector<std::string> target_names = {},
                              const PropChoices& choices = {}, const Limits& limits = {});

struct PropRefinementReport {
    std::string tower_id;
    long long p = 2;
    int e = 1;
    long long regular_lower_tuples = 0;
    bool counts_all_equal = true;
    BigInt common_count;
    BigInt gaschutz_factor;
    BigInt kernel_power;  // |ker(restriction) ∩ S_upper ∩ G0_upper|^e
    BigInt predicted;
    bool matches_prediction = false;
};

// Lift-count constancy inside compatible Sylow subgroups: the lower Sylow is
// the image of the upper one, and every regular lower tuple must have the
// same number of regular lifts, equal to the quotient Gaschütz factor times
// the p-kernel power.
PropRefinementReport verify_prop_refinement(const TowerScenario& t, long long p, int e,
                                            const Limits& limits = {});

}  // namespace galmeas
