#include "galmeasure/asymptotics.hpp"

namespace galmeas {

OmegaSumReport omega_sum(const SignedPowerSum& form, int start) {
    if (start < 1) fail("ParseError", "series start must be >= 1");
    OmegaSumReport out;
    out.form = form;
    out.start = start;

    Rational total(0);
    for (const auto& [pe, pv] : form.prefix)
        if (pe >= start && pe < form.e1) total += pv;

    const int tail_start = std::max(start, form.e1);
    for (const auto& t : form.terms) {
        if (t.scale == form.base) {
            if (t.coeff.sign() < 0)
                fail("NotZeroOne", "form diverges to -infinity; not a measure series");
            out.infinite = true;
            continue;
        }
        // sum_{e >= m} c (s/n)^e = c * (s/n)^m * n/(n-s)
        Rational head(BigInt::power(BigInt(t.scale), static_cast<unsigned long long>(tail_start)),
                      BigInt::power(BigInt(form.base), static_cast<unsigned long long>(tail_start)));
        total += Rational(t.coeff) * head *
                 Rational(BigInt(form.base), BigInt(form.base) - BigInt(t.scale));
    }
    if (!out.infinite) out.value = total;
    return out;
}

UltralimitReport ultralimit(const SignedPowerSum& form) {
    BigInt c = form.limit_coefficient();
    if (c != BigInt(0) && c != BigInt(1))
        fail("NotZeroOne", "limit coefficient " + c.to_string() + " is outside {0,1}");
    UltralimitReport out;
    out.form = form;
    out.value = c == BigInt(1) ? 1 : 0;
    return out;
}

std::string generic_target(const CoverScenario& s) {
    if (!s.split()) fail("NotSplit", "generic target detection uses closed forms");
    const auto& L = *s.lattice();
    int full_class = L.class_of(L.full_node());
    const TargetClass* full_target = nullptr;
    for (const auto& t : s.targets())
        if (t.class_id == full_class) full_target = &t;
    if (!full_target)
        fail("GenericMissing", "the class of G itself is not among the declared targets");

    std::string generic;
    for (const auto& t : s.targets()) {
        auto lim = ultralimit(closed_form(s, t.name));
        if (lim.value == 1) {
            if (!generic.empty())
                fail("NotZeroOne", "two targets claim the generic limit");  // theory says impossible
            generic = t.name;
        }
    }
    if (generic != full_target->name)
        fail("NotZeroOne", "generic target is not the class of G");  // theory says impossible
    return generic;
}

}  // namespace galmeas
