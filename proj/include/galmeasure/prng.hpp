#pragma once

#include <cstdint>

namespace galmeas {

// Counter-based generator "splitmix64ctr-v1": output i of a stream is the
// splitmix64 finalizer applied to seed + (i+1)*golden. Stateless, splittable
// (derive sub-streams by hashing a label into the seed), identical on every
// platform. The name is pinned into reports so estimates stay reproducible.
struct CounterRng {
    static constexpr const char* kName = "splitmix64ctr-v1";

    uint64_t seed = 0;

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t at(uint64_t counter) const {
        return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform draw in [0, n) by rejection; advances *counter past every
    // word consumed so the stream stays reproducible.
    uint64_t below(uint64_t n, uint64_t* counter) const {
        const uint64_t limit = n == 0 ? 0 : (~uint64_t{0} - (~uint64_t{0} % n + 1) % n);
        for (;;) {
            uint64_t v = at((*counter)++);
            if (v <= limit) return v % n;
        }
    }
};

}  // namespace galmeas
