#include "galmeasure/amenability.hpp"

#include "galmeasure/prng.hpp"

namespace galmeas {

MeasuredGroup uniform_measure(const GroupPtr& G) {
    return uniform_measure_on(G, full_subgroup(G));
}

MeasuredGroup uniform_measure_on(const GroupPtr& G, const Subgroup& H) {
    long long order = H.order();
    return MeasuredGroup{G, H, [order](const ElemSet& X) {
                             return Rational(BigInt(X.count()), BigInt(order));
                         }};
}

MeasuredGroup finite_index_extend(const GroupPtr& G, const MeasuredGroup& mu_h,
                                  const std::vector<int>& transversal) {
    const Subgroup& H = mu_h.carrier;
    const long long n = static_cast<long long>(transversal.size());
    if (n * H.order() != G->order() || transversal.empty() || transversal[0] != 0)
        fail("NotTransversal", "need a full left transversal starting at the identity");
    ElemSet covered(G->order());
    for (int g : transversal)
        for (int h : H.member_list) {
            int x = G->mul(g, h);
            if (covered.test(x)) fail("NotTransversal", "coset representatives overlap");
            covered.set(x);
        }
    if (covered.count() != G->order()) fail("NotTransversal", "cosets do not cover the group");

    auto mu = [G, mu_h, transversal, n](const ElemSet& X) {
        Rational sum(0);
        for (int g : transversal) {
            int ginv = G->inv(g);
            ElemSet slice(G->order());
            for (int h : mu_h.carrier.member_list) {
                int x = G->mul(g, h);
                if (X.test(x)) slice.set(G->mul(ginv, x));
            }
            sum += mu_h.mu(slice);
        }
        return sum * Rational(BigInt(1), BigInt(n));
    };
    return MeasuredGroup{G, full_subgroup(G), std::move(mu)};
}

MeasuredGroup finite_kernel_pull(const Epimorphism& pi, const MeasuredGroup& mu_h) {
    if (mu_h.parent != pi.target || mu_h.carrier.order() != pi.target->order())
        fail("BadTower", "the measure must live on the full epimorphism target");
    const long long n = pi.source->order() / pi.target->order();

    auto mu = [pi, mu_h, n](const ElemSet& X) {
        std::vector<int> fiber_count(static_cast<size_t>(pi.target->order()), 0);
        for (int x : X.to_list()) ++fiber_count[static_cast<size_t>(pi.map(x))];
        Rational sum(0);
        for (long long i = 1; i <= n; ++i) {
            ElemSet level(pi.target->order());
            bool any = false;
            for (int t = 0; t < pi.target->order(); ++t) {
                if (fiber_count[static_cast<size_t>(t)] == i) {
                    level.set(t);
                    any = true;
                }
            }
            if (any) sum += Rational(BigInt(i)) * mu_h.mu(level);
        }
        return sum * Rational(BigInt(1), BigInt(n));
    };
    return MeasuredGroup{pi.source, full_subgroup(pi.source), std::move(mu)};
}

MeasureAudit audit_measure(const MeasuredGroup& mg, long long exhaustive_limit, int samples,
                           uint64_t seed) {
    const auto& G = *mg.parent;
    const auto& members = mg.carrier.member_list;
    const int k = static_cast<int>(members.size());
    std::vector<int> pos(static_cast<size_t>(G.order()), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(members[static_cast<size_t>(i)])] = i;

    auto set_of_mask = [&](uint64_t mask) {
        ElemSet X(G.order());
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) X.set(members[static_cast<size_t>(i)]);
        return X;
    };
    auto translate_mask = [&](int g, uint64_t mask) {
        uint64_t out = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1)
                out |= 1ull << pos[static_cast<size_t>(G.mul(g, members[static_cast<size_t>(i)]))];
        return out;
    };

    MeasureAudit audit;
    ElemSet empty(G.order());
    audit.mass_one = mg.mu(mg.carrier.members) == Rational(1) && mg.mu(empty) == Rational(0);
    audit.additive = true;
    audit.invariant = true;

    if (k < 63 && (1ll << k) <= exhaustive_limit) {
        audit.exhaustive = true;
        const uint64_t total = 1ull << k;
        std::vector<Rational> table;
        table.reserve(total);
        for (uint64_t m = 0; m < total; ++m) table.push_back(mg.mu(set_of_mask(m)));
        for (uint64_t m = 0; m < total; ++m) {
            // all subsets of the complement, the classic submask walk
            uint64_t comp = ~m & (total - 1);
            for (uint64_t sub = comp;; sub = (sub - 1) & comp) {
                ++audit.checks;
                if (!(table[m | sub] == table[m] + table[sub])) {
                    audit.additive = false;
                    break;
                }
                if (sub == 0) break;
            }
            if (!audit.additive) break;
        }
        for (int g : members) {
            for (uint64_t m = 0; m < total && audit.invariant; ++m) {
                ++audit.checks;
                if (!(table[translate_mask(g, m)] == table[m])) audit.invariant = false;
            }
            if (!audit.invariant) break;
        }
        return audit;
    }

    CounterRng rng{seed};
    uint64_t ctr = 0;
    auto random_subset_of = [&](const std::vector<int>& universe) {
        ElemSet X(G.order());
        for (int x : universe)
            if (rng.below(2, &ctr)) X.set(x);
        return X;
    };
    for (int it = 0; it < samples; ++it) {
        ElemSet X = random_subset_of(members);
        std::vector<int> rest;
        for (int x : members)
            if (!X.test(x)) rest.push_back(x);
        ElemSet Y = random_subset_of(rest);
        ++audit.checks;
        if (!(mg.mu(X.unite(Y)) == mg.mu(X) + mg.mu(Y))) audit.additive = false;

        int g = members[static_cast<size_t>(rng.below(static_cast<uint64_t>(k), &ctr))];
        ElemSet gX(G.order());
        for (int x : X.to_list()) gX.set(G.mul(g, x));
        ++audit.checks;
        if (!(mg.mu(gX) == mg.mu(X))) audit.invariant = false;
    }
    return audit;
}

}  // namespace galmeas
