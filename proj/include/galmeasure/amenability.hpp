#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "galmeasure/group.hpp"
#include "galmeasure/rational.hpp"

namespace galmeas {

// A finitely additive left-invariant probability measure on the subsets of a
// carrier subgroup, given as a total function on bitsets in parent indexing.
struct MeasuredGroup {
    GroupPtr parent;
    Subgroup carrier;
    std::function<Rational(const ElemSet&)> mu;

    Rational operator()(const ElemSet& X) const { return mu(X); }
};

MeasuredGroup uniform_measure(const GroupPtr& G);
MeasuredGroup uniform_measure_on(const GroupPtr& G, const Subgroup& H);

// Finite-index construction: mu_G(X) = (1/n) sum_i mu_H(g_i^{-1} (X ∩ g_i H))
// for a full left transversal g_1 = identity, ..., g_n of H in G.
// Throws NotTransversal.
MeasuredGroup finite_index_extend(const GroupPtr& G, const MeasuredGroup& mu_h,
                                  const std::vector<int>& transversal);

// Finite-kernel construction along an epimorphism pi: G -> H:
// (X)_i = {x in X : |X ∩ pi^{-1}(pi(x))| = i},
// mu_G(X) = (1/n) sum_{i=1..n} i * mu_H(pi((X)_i)), n = |ker pi|.
MeasuredGroup finite_kernel_pull(const Epimorphism& pi, const MeasuredGroup& mu_h);

// Checks total mass, finite additivity on disjoint subsets, and left
// translation invariance. Exhaustive over all subsets when 2^|carrier| stays
// within `exhaustive_limit`, otherwise on seeded random subsets.
struct MeasureAudit {
    bool mass_one = false;
    bool additive = false;
    bool invariant = false;
    bool exhaustive = false;
    long long checks = 0;

    bool ok() const { return mass_one && additive && invariant; }
};

MeasureAudit audit_measure(const MeasuredGroup& mg, long long exhaustive_limit = 4096,
                           int samples = 2000, uint64_t seed = 1);

}  // namespace galmeas
