#pragma once

#include <vector>

#include "galmeasure/bigint.hpp"
#include "galmeasure/rational.hpp"

namespace galmeas {

// Exact closed form  sum_i coeff_i * (scale_i / base)^e  valid for e >= e1,
// with explicit exceptional values for smaller e. Scales are distinct and
// ascending; zero coefficients are dropped.
struct PowerTerm {
    BigInt coeff;
    long long scale = 1;  // n_i, 1 <= n_i <= base
};

struct SignedPowerSum {
    long long base = 1;  // n
    std::vector<PowerTerm> terms;
    int e1 = 1;
    std::vector<std::pair<int, Rational>> prefix;  // (e, value) for e < e1

    Rational evaluate(int e) const;
    // Total coefficient of the scale == base terms (the e -> infinity limit).
    BigInt limit_coefficient() const;
    void normalize();  // merge equal scales, drop zeros, sort ascending
};

}  // namespace galmeas
