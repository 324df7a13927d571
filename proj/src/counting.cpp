#include "galmeasure/counting.hpp"

#include <unordered_map>

namespace galmeas {

BigInt hall_phi(const SubgroupLattice& L, int node, int e) {
    require_rank(e);
    const auto& bel = L.below(node);
    const auto& mob = L.mobius_column(node);
    BigInt sum;
    for (size_t i = 0; i < bel.size(); ++i) {
        if (mob[i] == 0) continue;
        sum += BigInt(mob[i]) *
               BigInt::power(BigInt(L.node(bel[i]).order()), static_cast<unsigned long long>(e));
    }
    return sum;
}

BigInt TupleSpectrum::total() const {
    BigInt t;
    for (const auto& c : class_counts) t += c;
    return t;
}

TupleSpectrum tuple_spectrum(const LatticePtr& L, int e) {
    TupleSpectrum out;
    out.lattice = L;
    out.e = e;
    out.class_counts.resize(static_cast<size_t>(L->num_classes()));
    for (int c = 0; c < L->num_classes(); ++c) {
        BigInt per = hall_phi(*L, L->class_rep(c), e);
        out.class_counts[static_cast<size_t>(c)] =
            BigInt(static_cast<long long>(L->class_members(c).size())) * per;
    }
    return out;
}

TupleSpectrum brute_force_spectrum(const LatticePtr& L, int e, const Limits& limits) {
    require_rank(e);
    const auto& G = *L->group();
    BigInt work = BigInt::power(BigInt(G.order()), static_cast<unsigned long long>(e));
    if (work > BigInt(limits.max_enumeration))
        fail_cap("EnumerationTooLarge", "|G|^e = " + work.to_string() +
                                            " exceeds the enumeration cap of " +
                                            std::to_string(limits.max_enumeration));

    TupleSpectrum out;
    out.lattice = L;
    out.e = e;
    out.class_counts.assign(static_cast<size_t>(L->num_classes()), BigInt());
    std::vector<long long> tally(static_cast<size_t>(L->num_classes()), 0);

    std::vector<int> tuple(static_cast<size_t>(e), 0);
    for (;;) {
        ElemSet gen = closure_set(G, tuple);
        int node = L->node_of(gen);
        ++tally[static_cast<size_t>(L->class_of(node))];
        int pos = e - 1;
        while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == G.order()) {
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    for (size_t c = 0; c < tally.size(); ++c) out.class_counts[c] = BigInt(tally[c]);
    return out;
}

namespace {

// Minimal number of extra generators needed to grow `node` into `target`
// inside the lattice; memoized over nodes below the target.
int min_extra_generators(const SubgroupLattice& L, int node, int target,
                         const std::vector<int>& cyclic_of,
                         std::unordered_map<int, int>& memo) {
    if (node == target) return 0;
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    int best = L.node(target).order() + 1;  // over-the-top sentinel
    for (int x : L.node(target).member_list) {
        if (L.node(node).contains(x)) continue;
        int next = L.join(node, cyclic_of[static_cast<size_t>(x)]);
        int v = min_extra_generators(L, next, target, cyclic_of, memo);
        if (v + 1 < best) best = v + 1;
    }
    memo.emplace(node, best);
    return best;
}

bool min_tuple_dfs(const SubgroupLattice& L, int target, const std::vector<int>& cyclic_of,
                   std::unordered_map<int, int>& memo, int node, int slots,
                   std::vector<int>& acc) {
    if (slots == 0) return node == target;
    for (int x : L.node(target).member_list) {
        int next = x == 0 ? node : L.join(node, cyclic_of[static_cast<size_t>(x)]);
        if (min_extra_generators(L, next, target, cyclic_of, memo) <= slots - 1) {
            acc.push_back(x);
            if (min_tuple_dfs(L, target, cyclic_of, memo, next, slots - 1, acc)) return true;
            acc.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> min_generating_tuple(const SubgroupLattice& L, int node, int e) {
    std::vector<int> cyclic_of(static_cast<size_t>(L.group()->order()), 0);
    for (int x : L.node(node).member_list) {
        int one[] = {x};
        cyclic_of[static_cast<size_t>(x)] = L.node_of(closure_set(*L.group(), one));
    }
    std::unordered_map<int, int> memo;
    if (min_extra_generators(L, L.trivial_node(), node, cyclic_of, memo) > e) return std::nullopt;
    std::vector<int> acc;
    if (!min_tuple_dfs(L, node, cyclic_of, memo, L.trivial_node(), e, acc)) return std::nullopt;
    return acc;
}

GaschutzReport gaschutz_count(const Epimorphism& f, int e,
                              std::optional<std::vector<int>> target_tuple, const Limits& limits) {
    require_rank(e);
    auto src_lat = SubgroupLattice::build(f.source, limits);
    auto tgt_lat = SubgroupLattice::build(f.target, limits);

    GaschutzReport out;
    out.e = e;
    out.source_gen_count = hall_phi(*src_lat, src_lat->full_node(), e);
    out.target_gen_count = hall_phi(*tgt_lat, tgt_lat->full_node(), e);
    if (out.source_gen_count.is_zero())
        fail("NotEGenerated", "source group is not generated by " + std::to_string(e) + " elements");

    if (target_tuple) {
        if (static_cast<int>(target_tuple->size()) != e)
            fail("NotGenerating", "target tuple has the wrong length");
        for (int t : *target_tuple)
            if (t < 0 || t >= f.target->order())
                fail("NotGenerating", "target tuple index out of range");
        ElemSet gen = closure_set(*f.target, *target_tuple);
        if (gen.count() != f.target->order())
            fail("NotGenerating", "supplied tuple does not generate the target");
    } else {
        target_tuple = min_generating_tuple(*tgt_lat, tgt_lat->full_node(), e);
        if (!target_tuple)
            fail("NotEGenerated", "target group is not generated by " + std::to_string(e) + " elements");
    }
    out.target_tuple = *target_tuple;

    // Fibers over each component; enumerate all lift combinations.
    std::vector<std::vector<int>> preimages(static_cast<size_t>(f.target->order()));
    for (int s = 0; s < f.source->order(); ++s)
        preimages[static_cast<size_t>(f.map(s))].push_back(s);
    BigInt combos(1);
    for (int t : out.target_tuple)
        combos *= BigInt(static_cast<long long>(preimages[static_cast<size_t>(t)].size()));
    if (combos > BigInt(limits.max_enumeration))
        fail_cap("EnumerationTooLarge", "lift enumeration of " + combos.to_string() +
                                            " tuples exceeds the cap");

    long long hits = 0;
    std::vector<int> pick(static_cast<size_t>(e), 0);
    std::vector<int> lift(static_cast<size_t>(e), 0);
    for (;;) {
        for (int j = 0; j < e; ++j)
            lift[static_cast<size_t>(j)] =
                preimages[static_cast<size_t>(out.target_tuple[static_cast<size_t>(j)])]
                         [static_cast<size_t>(pick[static_cast<size_t>(j)])];
        if (closure_set(*f.source, lift).count() == f.source->order()) ++hits;
        int pos = e - 1;
        while (pos >= 0) {
            auto& fiber = preimages[static_cast<size_t>(out.target_tuple[static_cast<size_t>(pos)])];
            if (++pick[static_cast<size_t>(pos)] < static_cast<int>(fiber.size())) break;
            pick[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    out.lift_count = BigInt(hits);
    return out;
}

}  // namespace galmeas
