#pragma once

#include <optional>
#include <vector>

#include "galmeasure/bigint.hpp"
#include "galmeasure/lattice.hpp"

namespace galmeas {

inline void require_rank(int e) {
    if (e < 1) fail("ParseError", "the tuple length e must be >= 1");
}

// Number of e-tuples of elements of the node's subgroup that generate it,
// by Möbius inversion over the subgroup lattice:
//   phi_H(e) = sum_{K <= H} mobius(K, H) |K|^e.
BigInt hall_phi(const SubgroupLattice& L, int node, int e);

// e-tuples of the whole group classified by the conjugacy class of the
// subgroup they generate.
struct TupleSpectrum {
    LatticePtr lattice;
    int e = 1;
    std::vector<BigInt> class_counts;  // indexed by lattice class id

    BigInt total() const;
    const BigInt& count_for_class(int c) const { return class_counts[static_cast<size_t>(c)]; }
};

// counts[class of D] = (number of conjugates of D) * phi_D(e).
TupleSpectrum tuple_spectrum(const LatticePtr& L, int e);

// Same contract, by direct enumeration of all |G|^e tuples. Testing oracle;
// throws EnumerationTooLarge past the cap.
TupleSpectrum brute_force_spectrum(const LatticePtr& L, int e, const Limits& limits = {});

// Lexicographically smallest e-tuple of elements of the node's subgroup that
// generates it, identity-padded where there is slack; nullopt when the
// subgroup needs more than e generators.
std::optional<std::vector<int>> min_generating_tuple(const SubgroupLattice& L, int node, int e);

struct GaschutzReport {
    int e = 1;
    std::vector<int> target_tuple;  // the generating tuple whose lifts were counted
    BigInt lift_count;              // generating lifts of target_tuple
    BigInt source_gen_count;        // phi(source, e)
    BigInt target_gen_count;        // phi(target, e)
};

// Counts generating lifts of a generating target tuple along the epimorphism.
// The count is independent of the tuple; when none is supplied the canonical
// minimal tuple is used. Throws NotEGenerated / NotGenerating.
GaschutzReport gaschutz_count(const Epimorphism& f, int e,
                              std::optional<std::vector<int>> target_tuple = std::nullopt,
                              const Limits& limits = {});

}  // namespace galmeas
