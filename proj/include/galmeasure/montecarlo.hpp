#pragma once

#include <cstdint>
#include <string>

#include "galmeasure/measure.hpp"

namespace galmeas {

struct EstimateReport {
    std::string scenario_id;
    std::string target;
    int e = 1;
    long long samples = 0;
    uint64_t seed = 0;
    std::string generator;  // pinned generator name/version

    long long accepted = 0;  // tuples that passed the regularity rejection
    long long hits = 0;      // accepted tuples generating the target class
    bool no_regular_samples = false;

    Rational estimate;  // hits / accepted, 0 when nothing was accepted
    Rational exact;     // measure_at value
    Rational abs_error;
    double sigma = 0;   // sqrt(p (1-p) / accepted) from the exact p
    bool within_4_sigma = false;
};

// Draws uniform e-tuples with the seeded counter generator, rejects tuples
// that are not regular, and estimates the conditional frequency of the target
// class. Byte-identical output for identical inputs.
EstimateReport sample_measure(const CoverScenario& s, const std::string& target_name, int e,
                              long long samples, uint64_t seed);

}  // namespace galmeas
