#include "galmeasure/sylow_measure.hpp"

#include <algorithm>

namespace galmeas {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_p_power(long long n, long long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

long long p_part(long long n, long long p) {
    long long out = 1;
    while (n % p == 0) {
        out *= p;
        n /= p;
    }
    return out;
}

// Standalone realization of a subgroup, with index maps in both directions.
struct Realized {
    GroupPtr group;
    std::vector<int> to_parent;    // realized index -> parent index
    std::vector<int> from_parent;  // parent index -> realized index or -1
};

Realized realize(const GroupPtr& G, const Subgroup& S) {
    std::vector<Permutation> gens;
    for (int x : S.member_list) gens.push_back(G->element(x));
    Realized r;
    r.group = FiniteGroup::from_generators(G->degree(), std::move(gens));
    r.to_parent.assign(static_cast<size_t>(r.group->order()), -1);
    r.from_parent.assign(static_cast<size_t>(G->order()), -1);
    for (int i = 0; i < r.group->order(); ++i) {
        int pidx = G->index_of(r.group->element(i));
        r.to_parent[static_cast<size_t>(i)] = pidx;
        r.from_parent[static_cast<size_t>(pidx)] = i;
    }
    return r;
}

}  // namespace

MeasureReport prop_measure_at(const CoverScenario& s, long long p, int e,
                              std::vector<std::string> target_names, const PropChoices& choices,
                              const Limits& limits) {
    require_rank(e);
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    const auto& G = s.group();
    const auto& L = *s.lattice();

    long long q_order = G->order() / s.g0().order();
    if (!is_p_power(q_order, p))
        fail("QuotientNotPGroup",
             "the quotient has order " + std::to_string(q_order) + ", not a power of " +
                 std::to_string(p));

    if (target_names.empty())
        for (const auto& t : s.targets()) target_names.push_back(t.name);
    std::vector<const TargetClass*> targets;
    for (const auto& name : target_names) {
        targets.push_back(&s.target(name));
        long long horder = L.node(targets.back()->node).order();
        if (!is_p_power(horder, p))
            fail("TargetNotPGroup", "target '" + name + "' has order " + std::to_string(horder) +
                                        ", not a power of " + std::to_string(p));
    }

    // Sylow choice.
    Subgroup S = choices.sylow ? *choices.sylow : sylow_subgroup(L, p);
    if (S.order() != p_part(G->order(), p))
        fail("QuotientNotPGroup", "supplied subgroup is not a p-Sylow subgroup");
    int s_node = L.node_of(S);
    if (s_node < 0) fail("QuotientNotPGroup", "supplied Sylow choice is not a subgroup");

    // Embedded targets: G-conjugates of the declared representatives inside S.
    std::vector<int> embedded_nodes;
    if (choices.embedded) {
        if (choices.embedded->size() != targets.size())
            fail("TargetNotPGroup", "need one embedded representative per requested target");
        for (size_t i = 0; i < targets.size(); ++i) {
            int node = L.node_of((*choices.embedded)[i]);
            if (node < 0 || !L.leq(node, s_node) || L.class_of(node) != targets[i]->class_id)
                fail("TargetNotPGroup",
                     "embedded choice is not a conjugate of the target inside the Sylow subgroup");
            embedded_nodes.push_back(node);
        }
    } else {
        for (const auto* t : targets) {
            int found = -1;
            for (int node : L.class_members(t->class_id)) {
                if (L.leq(node, s_node)) {
                    found = node;
                    break;
                }
            }
            if (found < 0)
                fail("TargetNotPGroup",
                     "no conjugate of target '" + t->name + "' lies in the Sylow subgroup");
            embedded_nodes.push_back(found);
        }
    }

    // Count inside the standalone realization of S.
    Realized R = realize(G, S);
    auto SL = SubgroupLattice::build(R.group, limits);
    auto spec = tuple_spectrum(SL, e);

    // S ∩ G0 inside the realization.
    std::vector<int> sg0;
    for (int x : S.member_list)
        if (s.g0().contains(x)) sg0.push_back(R.from_parent[static_cast<size_t>(x)]);
    Subgroup SG0 = subgroup_generated(R.group, sg0);

    BigInt den;
    std::vector<char> regular(static_cast<size_t>(SL->num_classes()), 0);
    for (int c = 0; c < SL->num_classes(); ++c) {
        if (product_set_order(SL->node(SL->class_rep(c)), SG0) == R.group->order()) {
            regular[static_cast<size_t>(c)] = 1;
            den += spec.class_counts[static_cast<size_t>(c)];
        }
    }
    if (den.is_zero())
        fail("NoRegularTuples", "no tuple in the Sylow subgroup projects onto the quotient");

    MeasureReport out;
    out.scenario_id = s.id();
    out.e = e;
    out.method = "sylow-spectrum";
    out.regular_total = den;
    for (size_t i = 0; i < targets.size(); ++i) {
        std::vector<int> members;
        for (int x : L.node(embedded_nodes[i]).member_list)
            members.push_back(R.from_parent[static_cast<size_t>(x)]);
        Subgroup emb = subgroup_generated(R.group, members);
        int node = SL->node_of(emb);
        const BigInt& num = spec.class_counts[static_cast<size_t>(SL->class_of(node))];
        out.per_target.push_back({targets[i]->name, num, den, Rational(num, den)});
    }
    return out;
}

PropRefinementReport verify_prop_refinement(const TowerScenario& t, long long p, int e,
                                            const Limits& limits) {
    require_rank(e);
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    for (const CoverScenario* level : {&t.upper, &t.lower}) {
        long long q = level->group()->order() / level->g0().order();
        if (!is_p_power(q, p))
            fail("QuotientNotPGroup", "a tower level has non-p quotient of order " + std::to_string(q));
    }

    const auto& GM = t.upper.group();
    const auto& GL = t.lower.group();
    Subgroup SM = sylow_subgroup(*t.upper.lattice(), p);
    // Compatible lower Sylow: the image of the upper one.
    ElemSet sl_set(GL->order());
    for (int x : SM.member_list) sl_set.set(t.restriction.map(x));
    std::vector<int> sl_members = sl_set.to_list();
    Subgroup SL_sub = subgroup_generated(GL, sl_members);
    if (SL_sub.order() != static_cast<int>(p_part(GL->order(), p)))
        fail("BadTower", "image of the upper Sylow subgroup is not a lower Sylow subgroup");

    Realized RM = realize(GM, SM);
    Realized RL = realize(GL, SL_sub);

    // S ∩ G0 at both levels, within the realizations.
    auto meet_g0 = [](const Realized& R, const Subgroup& S, const Subgroup& G0) {
        std::vector<int> idx;
        for (int x : S.member_list)
            if (G0.contains(x)) idx.push_back(R.from_parent[static_cast<size_t>(x)]);
        return subgroup_generated(R.group, idx);
    };
    Subgroup SM_G0 = meet_g0(RM, SM, t.upper.g0());
    Subgroup SL_G0 = meet_g0(RL, SL_sub, t.lower.g0());

    BigInt work = BigInt::power(BigInt(RM.group->order()), static_cast<unsigned long long>(e));
    if (work > BigInt(limits.max_enumeration))
        fail_cap("EnumerationTooLarge", "Sylow lift verification exceeds the enumeration cap");

    // Fibers of the restriction between the Sylow realizations.
    std::vector<std::vector<int>> fiber(static_cast<size_t>(RL.group->order()));
    for (int i = 0; i < RM.group->order(); ++i) {
        int parent = RM.to_parent[static_cast<size_t>(i)];
        int low_parent = t.restriction.map(parent);
        fiber[static_cast<size_t>(RL.from_parent[static_cast<size_t>(low_parent)])].push_back(i);
    }

    PropRefinementReport out;
    out.tower_id = t.id;
    out.p = p;
    out.e = e;

    bool first = true;
    std::vector<int> lower_tuple(static_cast<size_t>(e), 0);
    std::vector<int> pick(static_cast<size_t>(e), 0);
    std::vector<int> lift(static_cast<size_t>(e), 0);
    for (;;) {
        ElemSet low = closure_set(*RL.group, lower_tuple);
        Subgroup lowsub = subgroup_generated(RL.group, low.to_list());
        if (product_set_order(lowsub, SL_G0) == RL.group->order()) {
            ++out.regular_lower_tuples;
            long long count = 0;
            std::fill(pick.begin(), pick.end(), 0);
            for (;;) {
                for (int j = 0; j < e; ++j)
                    lift[static_cast<size_t>(j)] =
                        fiber[static_cast<size_t>(lower_tuple[static_cast<size_t>(j)])]
                             [static_cast<size_t>(pick[static_cast<size_t>(j)])];
                ElemSet up = closure_set(*RM.group, lift);
                Subgroup upsub = subgroup_generated(RM.group, up.to_list());
                if (product_set_order(upsub, SM_G0) == RM.group->order()) ++count;
                int pos = e - 1;
                while (pos >= 0) {
                    auto& f = fiber[static_cast<size_t>(lower_tuple[static_cast<size_t>(pos)])];
                    if (++pick[static_cast<size_t>(pos)] < static_cast<int>(f.size())) break;
                    pick[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
            if (first) {
                out.common_count = BigInt(count);
                first = false;
            } else if (BigInt(count) != out.common_count) {
                out.counts_all_equal = false;
            }
        }
        int pos = e - 1;
        while (pos >= 0 && ++lower_tuple[static_cast<size_t>(pos)] == RL.group->order()) {
            lower_tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    // Prediction: quotient Gaschütz factor times the p-kernel power.
    const auto& qm = t.upper.to_quotient();
    const auto& ql = t.lower.to_quotient();
    std::vector<int> qrep(static_cast<size_t>(qm.target->order()), -1);
    for (int g = 0; g < GM->order(); ++g) {
        int q = qm.map(g);
        if (qrep[static_cast<size_t>(q)] < 0) qrep[static_cast<size_t>(q)] = g;
    }
    std::vector<int> induced(static_cast<size_t>(qm.target->order()));
    for (int q = 0; q < qm.target->order(); ++q)
        induced[static_cast<size_t>(q)] = ql.map(t.restriction.map(qrep[static_cast<size_t>(q)]));
    auto qepi = make_epimorphism(qm.target, ql.target, induced);
    auto qm_lat = SubgroupLattice::build(qm.target, limits);
    out.gaschutz_factor = hall_phi(*qm_lat, qm_lat->full_node(), e).is_zero()
                              ? BigInt(0)
                              : gaschutz_count(qepi, e, std::nullopt, limits).lift_count;

    long long kernel_meet = 0;
    for (int x : SM.member_list)
        if (t.restriction.map(x) == 0 && t.upper.g0().contains(x)) ++kernel_meet;
    out.kernel_power = BigInt::power(BigInt(kernel_meet), static_cast<unsigned long long>(e));
    out.predicted = out.gaschutz_factor * out.kernel_power;
    out.matches_prediction = out.counts_all_equal && out.common_count == out.predicted;
    return out;
}

}  // namespace galmeas
