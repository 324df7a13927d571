#include "galmeasure/montecarlo.hpp"

#include <cmath>

#include "galmeasure/prng.hpp"

namespace galmeas {

EstimateReport sample_measure(const CoverScenario& s, const std::string& target_name, int e,
                              long long samples, uint64_t seed) {
    require_rank(e);
    if (samples < 1) fail("ParseError", "need at least one sample");
    const auto& t = s.target(target_name);
    const auto& G = *s.group();
    const auto& L = *s.lattice();

    EstimateReport out;
    out.scenario_id = s.id();
    out.target = target_name;
    out.e = e;
    out.samples = samples;
    out.seed = seed;
    out.generator = CounterRng::kName;
    out.exact = measure_at(s, e).target(target_name).value;

    CounterRng rng{seed};
    uint64_t ctr = 0;
    std::vector<int> tuple(static_cast<size_t>(e), 0);
    for (long long i = 0; i < samples; ++i) {
        for (int j = 0; j < e; ++j)
            tuple[static_cast<size_t>(j)] =
                static_cast<int>(rng.below(static_cast<uint64_t>(G.order()), &ctr));
        int node = L.node_of(closure_set(G, tuple));
        if (!s.node_regular(node)) continue;
        ++out.accepted;
        if (L.class_of(node) == t.class_id) ++out.hits;
    }

    if (out.accepted == 0) {
        out.no_regular_samples = true;
        out.estimate = Rational(0);
        out.abs_error = out.exact;
        out.sigma = 0;
        out.within_4_sigma = false;
        return out;
    }
    out.estimate = Rational(BigInt(out.hits), BigInt(out.accepted));
    Rational err = out.estimate - out.exact;
    out.abs_error = err < Rational(0) ? -err : err;
    double p = out.exact.to_double();
    out.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(out.accepted));
    out.within_4_sigma = out.abs_error.to_double() <= 4.0 * out.sigma ||
                         (out.sigma == 0 && out.abs_error.is_zero());
    return out;
}

}  // namespace galmeas
