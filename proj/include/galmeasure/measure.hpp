#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "galmeasure/power_sum.hpp"
#include "galmeasure/rational.hpp"
#include "galmeasure/scenario.hpp"

namespace galmeas {

struct TargetMeasure {
    std::string name;
    BigInt numerator;
    BigInt denominator;
    Rational value;
};

struct MeasureReport {
    std::string scenario_id;
    int e = 1;
    std::vector<TargetMeasure> per_target;
    BigInt regular_total;  // denominator of the first counting scheme
    std::string method;

    const TargetMeasure& target(const std::string& name) const;
};

// First counting scheme: numerator counts tuples generating a subgroup in the
// target class, denominator counts tuples whose subgroup projects onto the
// quotient. Throws NoRegularTuples when the quotient is not e-generated.
MeasureReport measure_at(const CoverScenario& s, int e);

// Second counting scheme over the split: tuples sigma0 * tau with tau in G0^e
// and denominator |G0|^e. Uses direct enumeration under the cap and the
// regular-subposet Möbius formula above it; both compute the same number.
MeasureReport measure_split_at(const CoverScenario& s, int e,
                               std::optional<std::vector<int>> sigma0 = std::nullopt,
                               const Limits& limits = {});

// Exact closed form of the split measure as a signed power sum with
// base |G0|, valid for every e >= 1.
SignedPowerSum closed_form(const CoverScenario& s, const std::string& target_name);

// Measure of every regular e-generated class; their values sum to 1.
// Classes keep declared target names where applicable, otherwise class-<rep>.
MeasureReport measure_all_regular(const CoverScenario& s, int e);

struct RefinementReport {
    std::string tower_id;
    int e = 1;
    long long regular_lower_tuples = 0;
    bool counts_all_equal = true;
    BigInt common_count;
    BigInt gaschutz_factor;   // generating-lift count for Q_upper -> Q_lower
    BigInt kernel_power;      // |ker(restriction) ∩ upper G0|^e
    BigInt predicted;         // gaschutz_factor * kernel_power
    bool matches_prediction = false;
    // lower target name, lower measure, sum of matching upper measures
    std::vector<std::tuple<std::string, Rational, Rational>> per_target;
    bool measures_agree = true;
};

// For every regular lower tuple, counts regular lifts along the restriction
// and compares with the predicted constant; also checks that measures of
// pulled-back targets agree across the two levels.
RefinementReport verify_refinement(const TowerScenario& t, int e, const Limits& limits = {});

struct BijectionReport {
    std::string target;
    int e = 1;
    long long normalizer_index = 1;  // [N : H]
    Rational factor;                 // [N : H]^(e-1)
    TargetMeasure original;
    CoverScenario induced;           // base refined to the normalizer: (N, N ∩ G0, [H])
    BigInt induced_numerator;        // original numerator scaled by the factor
    Rational induced_value;          // factor * original value
    bool identity_holds = false;     // induced_value == factor * original value
    bool preserved_at_e1 = false;    // at e = 1 the refined scenario measures H identically
};

BijectionReport bijection_factor(const CoverScenario& s, const std::string& target_name, int e);

}  // namespace galmeas
