#pragma once

#include <string>

#include "galmeasure/measure.hpp"
#include "galmeasure/power_sum.hpp"

namespace galmeas {

struct OmegaSumReport {
    SignedPowerSum form;
    int start = 1;
    bool infinite = false;
    Rational value;  // meaningful only when finite
};

// Sum of the form's values over e >= start, by exact geometric series per
// term. Infinite exactly when the scale == base coefficient survives.
OmegaSumReport omega_sum(const SignedPowerSum& form, int start);

struct UltralimitReport {
    SignedPowerSum form;
    int value = 0;  // 0 or 1
};

// e -> infinity limit of the form; every scale < base term vanishes. Throws
// NotZeroOne when the limit is outside {0, 1}.
UltralimitReport ultralimit(const SignedPowerSum& form);

// The unique target whose ultralimit is 1: the class of G itself. Requires a
// split scenario whose target list contains that class; throws GenericMissing.
std::string generic_target(const CoverScenario& s);

}  // namespace galmeas
