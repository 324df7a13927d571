#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galmeasure/catalog.hpp"
#include "galmeasure/sylow_measure.hpp"

using namespace galmeas;

namespace {

// C4 over G0 = C2, quotient C2; the whole group is a 2-group.
CoverScenario c4_over_c2() {
    auto c4 = cyclic_group(4);
    int a = c4->index_of(Permutation({1, 2, 3, 0}));
    int sq = c4->index_of(Permutation({2, 3, 0, 1}));
    return CoverScenario::make("test:c4c2", c4, {sq}, std::nullopt, {{"full", {a}}});
}

// C2 x C4 over G0 = C2 x C2, quotient C2.
CoverScenario c2c4_over_c2c2() {
    auto g = direct_product(*cyclic_group(2), *cyclic_group(4));
    int s = g->index_of(Permutation({1, 0, 2, 3, 4, 5}));
    int t = g->index_of(Permutation({0, 1, 3, 4, 5, 2}));
    int t2 = g->mul(t, t);
    return CoverScenario::make("test:c2c4", g, {s, t2}, std::nullopt,
                               {{"c4", {t}}, {"full", {s, t}}});
}

// S4 over G0 = A4, quotient C2; Sylow subgroups are the three D4s.
CoverScenario s4_over_a4() {
    auto s4 = symmetric_group(4);
    int r3 = s4->index_of(Permutation({1, 2, 0, 3}));
    int dbl = s4->index_of(Permutation({1, 0, 3, 2}));
    int swap01 = s4->index_of(Permutation({1, 0, 2, 3}));
    int four = s4->index_of(Permutation({1, 2, 3, 0}));
    return CoverScenario::make("test:s4a4", s4, {r3, dbl}, std::nullopt,
                               {{"transposition", {swap01}}, {"four-cycle", {four}}});
}

// Independent oracle: enumerate tuples in the realized Sylow subgroup and
// classify by explicit S-conjugacy against the embedded representative.
Rational sylow_oracle(const CoverScenario& s, long long p, int e, const std::string& target) {
    auto S = sylow_subgroup(*s.lattice(), p);
    std::vector<Permutation> gens;
    for (int x : S.member_list) gens.push_back(s.group()->element(x));
    auto Sg = FiniteGroup::from_generators(s.group()->degree(), std::move(gens));

    // embedded representative: first conjugate of the target inside S
    const auto& L = *s.lattice();
    const auto& t = s.target(target);
    int emb = -1;
    for (int node : L.class_members(t.class_id))
        if (L.leq(node, L.node_of(S))) {
            emb = node;
            break;
        }
    REQUIRE(emb >= 0);
    ElemSet embset(Sg->order());
    for (int x : L.node(emb).member_list) embset.set(Sg->index_of(s.group()->element(x)));

    ElemSet sg0(Sg->order());
    for (int x : S.member_list)
        if (s.g0().contains(x)) sg0.set(Sg->index_of(s.group()->element(x)));
    auto sg0sub = subgroup_generated(Sg, sg0.to_list());

    long long num = 0, den = 0;
    std::vector<int> tuple(static_cast<size_t>(e), 0);
    for (;;) {
        ElemSet gen = closure_set(*Sg, tuple);
        auto gsub = subgroup_generated(Sg, gen.to_list());
        if (product_set_order(gsub, sg0sub) == Sg->order()) ++den;
        bool conj = false;
        for (int g = 0; g < Sg->order() && !conj; ++g) {
            ElemSet img(Sg->order());
            for (int x : gen.to_list()) img.set(Sg->conj(g, x));
            conj = img == embset;
        }
        if (conj) ++num;
        int pos = e - 1;
        while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == Sg->order()) {
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return Rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_CASE("pro-p equals the plain measure on p-groups") {
    for (auto make : {+[] { return catalog_scenario("squares"); }, +[] { return c4_over_c2(); },
                      +[] { return c2c4_over_c2c2(); }}) {
        auto s = make();
        for (int e = 1; e <= 3; ++e) {
            auto plain = measure_at(s, e);
            auto prop = prop_measure_at(s, 2, e);
            for (const auto& t : s.targets())
                CHECK(plain.target(t.name).value == prop.target(t.name).value);
        }
    }
}

TEST_CASE("pro-p preconditions") {
    auto fifth = catalog_scenario("fifth-root");
    CHECK_THROWS_WITH_AS((void)prop_measure_at(fifth, 5, 2), doctest::Contains("QuotientNotPGroup"),
                         ValidationError);
    CHECK_THROWS_WITH_AS((void)prop_measure_at(fifth, 2, 2, {"full"}),
                         doctest::Contains("TargetNotPGroup"), ValidationError);
    CHECK_THROWS_WITH_AS((void)prop_measure_at(fifth, 4, 2), doctest::Contains("NotPrime"),
                         ValidationError);
}

TEST_CASE("fifth-root at p = 2: every regular Sylow tuple hits the image class") {
    auto fifth = catalog_scenario("fifth-root");
    for (int e = 1; e <= 3; ++e) {
        auto r = prop_measure_at(fifth, 2, e, {"image"});
        CHECK(r.target("image").value == Rational(1));
    }
}

TEST_CASE("pro-p value matches the direct enumeration oracle") {
    auto s = c2c4_over_c2c2();
    for (int e = 1; e <= 2; ++e) {
        auto r = prop_measure_at(s, 2, e, {"c4"});
        CHECK(r.target("c4").value == sylow_oracle(s, 2, e, "c4"));
    }
    auto s4 = s4_over_a4();
    auto r = prop_measure_at(s4, 2, 2, {"transposition"});
    CHECK(r.target("transposition").value == sylow_oracle(s4, 2, 2, "transposition"));
}

TEST_CASE("choice invariance over Sylow subgroups and embeddings") {
    auto check_invariance = [](const CoverScenario& s, const std::string& target, int e) {
        const auto& L = *s.lattice();
        auto base = prop_measure_at(s, 2, e, {target});
        Subgroup canonical = sylow_subgroup(L, 2);
        int sylow_class = L.class_of(L.node_of(canonical));
        int combos = 0;
        for (int snode : L.class_members(sylow_class)) {
            PropChoices choices;
            choices.sylow = L.node(snode);
            // every admissible embedded conjugate inside this Sylow
            for (int hnode : L.class_members(s.target(target).class_id)) {
                if (!L.leq(hnode, snode)) continue;
                choices.embedded = std::vector<Subgroup>{L.node(hnode)};
                auto r = prop_measure_at(s, 2, e, {target}, choices);
                CHECK(r.target(target).value == base.target(target).value);
                CHECK(r.regular_total == base.regular_total);
                ++combos;
            }
        }
        return combos;
    };

    // five conjugate Sylow C4 subgroups in the Frobenius group
    CHECK(check_invariance(catalog_scenario("fifth-root"), "image", 2) == 5);
    // three Sylow D4 subgroups in S4, two embedded transposition groups each
    CHECK(check_invariance(s4_over_a4(), "transposition", 2) == 6);
    CHECK(check_invariance(s4_over_a4(), "four-cycle", 2) == 3);
}

TEST_CASE("pro-p refinement along towers") {
    // identity tower over the fifth-root scenario at p = 2
    auto fifth = catalog_scenario("fifth-root");
    auto ident = make_tower("test:ident", fifth, fifth, identity_epimorphism(fifth.group()));
    for (int e = 1; e <= 2; ++e) {
        auto r = verify_prop_refinement(ident, 2, e);
        CHECK(r.counts_all_equal);
        CHECK(r.common_count == BigInt(1));
        CHECK(r.matches_prediction);
    }

    // C8 over C4, everything geometric (trivial quotients)
    auto c8 = cyclic_group(8);
    auto c4 = cyclic_group(4);
    int a8 = c8->index_of(Permutation({1, 2, 3, 4, 5, 6, 7, 0}));
    int a8_4 = c8->mul(c8->mul(a8, a8), c8->mul(a8, a8));
    auto upper = CoverScenario::make("test:c8", c8, {a8}, std::nullopt, {{"full", {a8}}});
    auto lower = CoverScenario::make("test:c4", c4, {c4->index_of(Permutation({1, 2, 3, 0}))},
                                     std::nullopt, {{"full", {c4->index_of(Permutation({1, 2, 3, 0}))}}});
    std::vector<int> kg{a8_4};
    auto pi = quotient_map(c8, subgroup_generated(c8, kg));
    auto tower = make_tower("test:c8c4", upper, lower, retarget_epimorphism(pi, lower.group()));
    for (int e = 1; e <= 3; ++e) {
        auto r = verify_prop_refinement(tower, 2, e);
        CHECK(r.counts_all_equal);
        CHECK(r.common_count == BigInt::power(BigInt(2), e));
        CHECK(r.gaschutz_factor == BigInt(1));
        CHECK(r.matches_prediction);
    }

    // C4 x C2 over C2 x C2 with C2 quotients on both levels
    auto gm = direct_product(*cyclic_group(4), *cyclic_group(2));
    auto gl = direct_product(*cyclic_group(2), *cyclic_group(2));
    int ux = gm->index_of(Permutation({1, 2, 3, 0, 4, 5}));
    int uy = gm->index_of(Permutation({0, 1, 2, 3, 5, 4}));
    int lx = gl->index_of(Permutation({1, 0, 2, 3}));
    int ly = gl->index_of(Permutation({0, 1, 3, 2}));
    auto up = CoverScenario::make("test:up", gm, {ux}, std::nullopt, {{"full", {ux, uy}}});
    auto low = CoverScenario::make("test:low", gl, {lx}, std::nullopt, {{"full", {lx, ly}}});
    std::vector<int> image(static_cast<size_t>(gm->order()));
    for (int g = 0; g < gm->order(); ++g) {
        const auto& perm = gm->element(g);
        int a = perm[0];
        int b = perm[4] - 4;
        std::vector<int> im{a % 2 == 0 ? 0 : 1, a % 2 == 0 ? 1 : 0, 2, 3};
        if (b == 1) std::swap(im[2], im[3]);
        image[static_cast<size_t>(g)] = gl->index_of(Permutation(im));
    }
    auto tower2 = make_tower("test:mixed", up, low, make_epimorphism(gm, gl, image));
    for (int e = 1; e <= 2; ++e) {
        auto r = verify_prop_refinement(tower2, 2, e);
        CHECK(r.counts_all_equal);
        CHECK(r.matches_prediction);
        CHECK(r.common_count == BigInt::power(BigInt(2), e));
    }
}
