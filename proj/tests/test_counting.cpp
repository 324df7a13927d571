#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galmeasure/construct.hpp"
#include "galmeasure/counting.hpp"

using namespace galmeas;

namespace {

GroupPtr frobenius20() {
    return FiniteGroup::from_generators(
        5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 2, 4, 1, 3})});
}

int class_of_order(const SubgroupLattice& L, int order) {
    // first class whose representative has the given order
    for (int c = 0; c < L.num_classes(); ++c)
        if (L.node(L.class_rep(c)).order() == order) return c;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("hall counts") {
    auto Lc2 = SubgroupLattice::build(cyclic_group(2));
    CHECK(hall_phi(*Lc2, Lc2->full_node(), 1) == BigInt(1));

    auto Ls3 = SubgroupLattice::build(symmetric_group(3));
    CHECK(hall_phi(*Ls3, Ls3->full_node(), 2) == BigInt(18));
    CHECK(hall_phi(*Ls3, Ls3->full_node(), 1) == BigInt(0));  // S3 is not cyclic

    auto Lt = SubgroupLattice::build(FiniteGroup::from_generators(2, {}));
    CHECK(hall_phi(*Lt, Lt->full_node(), 1) == BigInt(1));
    CHECK(hall_phi(*Lt, Lt->full_node(), 7) == BigInt(1));
}

TEST_CASE("hall count is monotone in e and zero iff not e-generated") {
    for (auto G : {symmetric_group(3), cyclic_group(4), dihedral_group(4), frobenius20(),
                   direct_product(*cyclic_group(2), *cyclic_group(2))}) {
        auto L = SubgroupLattice::build(G);
        for (int node = 0; node < L->size(); ++node) {
            BigInt prev = hall_phi(*L, node, 1);
            for (int e = 2; e <= 4; ++e) {
                BigInt cur = hall_phi(*L, node, e);
                CHECK(cur >= prev);
                prev = cur;
            }
            bool generated_by_two = min_generating_tuple(*L, node, 2).has_value();
            CHECK((hall_phi(*L, node, 2) > BigInt(0)) == generated_by_two);
        }
    }
}

TEST_CASE("tuple spectrum closed forms") {
    auto Lc2 = SubgroupLattice::build(cyclic_group(2));
    auto s = tuple_spectrum(Lc2, 3);
    CHECK(s.count_for_class(Lc2->class_of(Lc2->trivial_node())) == BigInt(1));
    CHECK(s.count_for_class(Lc2->class_of(Lc2->full_node())) == BigInt(7));
    CHECK(s.total() == BigInt(8));

    auto Ls3 = SubgroupLattice::build(symmetric_group(3));
    auto s1 = tuple_spectrum(Ls3, 1);
    CHECK(s1.count_for_class(Ls3->class_of(Ls3->trivial_node())) == BigInt(1));
    CHECK(s1.count_for_class(class_of_order(*Ls3, 2)) == BigInt(3));
    CHECK(s1.count_for_class(class_of_order(*Ls3, 3)) == BigInt(2));
    CHECK(s1.count_for_class(Ls3->class_of(Ls3->full_node())) == BigInt(0));
    CHECK(s1.total() == BigInt(6));

    auto s2 = tuple_spectrum(Ls3, 2);
    CHECK(s2.count_for_class(Ls3->class_of(Ls3->full_node())) == BigInt(18));
    CHECK(s2.total() == BigInt(36));
}

TEST_CASE("spectrum matches the enumeration oracle") {
    struct Case {
        GroupPtr G;
        int max_e;
    };
    const Case cases[] = {
        {cyclic_group(2), 6},
        {cyclic_group(4), 5},
        {symmetric_group(3), 4},
        {dihedral_group(4), 4},
        {direct_product(*cyclic_group(2), *cyclic_group(4)), 3},
        {frobenius20(), 3},
        {symmetric_group(4), 3},
        {FiniteGroup::from_generators(4, {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})}), 3},
    };
    for (const auto& c : cases) {
        auto L = SubgroupLattice::build(c.G);
        for (int e = 1; e <= c.max_e; ++e) {
            auto fast = tuple_spectrum(L, e);
            auto slow = brute_force_spectrum(L, e);
            CHECK(fast.class_counts == slow.class_counts);
            CHECK(fast.total() == BigInt::power(BigInt(c.G->order()),
                                                static_cast<unsigned long long>(e)));
        }
    }
}

TEST_CASE("brute force spectrum on the order-20 group at e=3") {
    auto L = SubgroupLattice::build(frobenius20());
    auto s = brute_force_spectrum(L, 3);
    CHECK(s.total() == BigInt(8000));

    Limits tight;
    tight.max_enumeration = 100;
    CHECK_THROWS_AS(brute_force_spectrum(L, 3, tight), ResourceError);
}

TEST_CASE("minimal generating tuples") {
    auto Lc4 = SubgroupLattice::build(cyclic_group(4));
    auto t = min_generating_tuple(*Lc4, Lc4->full_node(), 3);
    REQUIRE(t.has_value());
    CHECK(t->size() == 3);
    CHECK(closure_set(*Lc4->group(), *t).count() == 4);
    // lexicographically minimal: identity padding comes first
    CHECK((*t)[0] == 0);
    CHECK((*t)[1] == 0);

    auto Lv4 = SubgroupLattice::build(direct_product(*cyclic_group(2), *cyclic_group(2)));
    CHECK_FALSE(min_generating_tuple(*Lv4, Lv4->full_node(), 1).has_value());
    CHECK(min_generating_tuple(*Lv4, Lv4->full_node(), 2).has_value());
}

TEST_CASE("gaschutz lift counts") {
    auto c4 = cyclic_group(4);
    int sq = c4->index_of(Permutation({2, 3, 0, 1}));
    std::vector<int> sg{sq};
    auto pi = quotient_map(c4, subgroup_generated(c4, sg));

    auto r1 = gaschutz_count(pi, 1);
    CHECK(r1.lift_count == BigInt(2));
    CHECK(r1.source_gen_count == r1.lift_count * r1.target_gen_count);

    auto r2 = gaschutz_count(pi, 2);
    CHECK(r2.source_gen_count == r2.lift_count * r2.target_gen_count);

    // invariant under the choice of generating tuple, checked exhaustively
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            std::vector<int> tuple{a, b};
            if (closure_set(*pi.target, tuple).count() != 2) continue;
            CHECK(gaschutz_count(pi, 2, tuple).lift_count == r2.lift_count);
        }
    }

    auto ids3 = identity_epimorphism(symmetric_group(3));
    CHECK(gaschutz_count(ids3, 2).lift_count == BigInt(1));
    CHECK(gaschutz_count(ids3, 3).lift_count == BigInt(1));
}

TEST_CASE("gaschutz error paths") {
    auto v4 = direct_product(*cyclic_group(2), *cyclic_group(2));
    CHECK_THROWS_AS(gaschutz_count(identity_epimorphism(v4), 1), ValidationError);

    auto c4 = cyclic_group(4);
    int sq = c4->index_of(Permutation({2, 3, 0, 1}));
    std::vector<int> sg{sq};
    auto pi = quotient_map(c4, subgroup_generated(c4, sg));
    std::vector<int> not_generating{0, 0};
    CHECK_THROWS_AS(gaschutz_count(pi, 2, not_generating), ValidationError);
}
