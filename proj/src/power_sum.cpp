#include "galmeasure/power_sum.hpp"

#include <algorithm>
#include <map>

#include "galmeasure/errors.hpp"

namespace galmeas {

Rational SignedPowerSum::evaluate(int e) const {
    if (e < 1) fail("ParseError", "power sums are defined for e >= 1");
    if (e < e1) {
        for (const auto& [pe, pv] : prefix)
            if (pe == e) return pv;
        fail("ParseError", "no exceptional value stored for e = " + std::to_string(e));
    }
    BigInt num;
    for (const auto& t : terms)
        num += t.coeff * BigInt::power(BigInt(t.scale), static_cast<unsigned long long>(e));
    return Rational(num, BigInt::power(BigInt(base), static_cast<unsigned long long>(e)));
}

BigInt SignedPowerSum::limit_coefficient() const {
    BigInt c;
    for (const auto& t : terms)
        if (t.scale == base) c += t.coeff;
    return c;
}

void SignedPowerSum::normalize() {
    std::map<long long, BigInt> merged;
    for (auto& t : terms) merged[t.scale] += t.coeff;
    terms.clear();
    for (auto& [scale, coeff] : merged)
        if (!coeff.is_zero()) terms.push_back({std::move(coeff), scale});
}

}  // namespace galmeas
