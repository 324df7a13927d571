#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galmeasure/amenability.hpp"
#include "galmeasure/construct.hpp"

using namespace galmeas;

namespace {

Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

ElemSet set_of(const GroupPtr& G, std::initializer_list<int> xs) {
    ElemSet out(G->order());
    for (int x : xs) out.set(x);
    return out;
}

}  // namespace

TEST_CASE("uniform measure") {
    auto s3 = symmetric_group(3);
    auto mu = uniform_measure(s3);
    int rot = s3->index_of(Permutation({1, 2, 0}));
    std::vector<int> rg{rot};
    auto a3 = subgroup_generated(s3, rg);
    CHECK(mu(a3.members) == rat(1, 2));
    CHECK(mu(full_subgroup(s3).members) == Rational(1));

    auto c4 = cyclic_group(4);
    CHECK(uniform_measure(c4)(set_of(c4, {2})) == rat(1, 4));
}

TEST_CASE("finite index extension") {
    auto s3 = symmetric_group(3);
    int rot = s3->index_of(Permutation({1, 2, 0}));
    int swap01 = s3->index_of(Permutation({1, 0, 2}));
    std::vector<int> rg{rot};
    auto a3 = subgroup_generated(s3, rg);
    auto mu = finite_index_extend(s3, uniform_measure_on(s3, a3), {0, swap01});

    ElemSet transpositions(s3->order());
    for (int x = 0; x < s3->order(); ++x)
        if (s3->element_order(x) == 2) transpositions.set(x);
    CHECK(transpositions.count() == 3);
    CHECK(mu(transpositions) == rat(1, 2));
    CHECK(mu(full_subgroup(s3).members) == Rational(1));

    auto c4 = cyclic_group(4);
    int a = c4->index_of(Permutation({1, 2, 3, 0}));
    int sq = c4->mul(a, a);
    std::vector<int> sg{sq};
    auto c2 = subgroup_generated(c4, sg);
    auto mu4 = finite_index_extend(c4, uniform_measure_on(c4, c2), {0, a});
    CHECK(mu4(c2.members) == rat(1, 2));

    CHECK_THROWS_WITH_AS(
        (void)finite_index_extend(s3, uniform_measure_on(s3, a3), {0, rot}),
        doctest::Contains("NotTransversal"), ValidationError);
    CHECK_THROWS_WITH_AS(
        (void)finite_index_extend(s3, uniform_measure_on(s3, a3), {swap01, 0}),
        doctest::Contains("NotTransversal"), ValidationError);
}

TEST_CASE("finite kernel pullback") {
    auto c4 = cyclic_group(4);
    int a = c4->index_of(Permutation({1, 2, 3, 0}));
    int sq = c4->mul(a, a);
    std::vector<int> sg{sq};
    auto pi = quotient_map(c4, subgroup_generated(c4, sg));
    auto mu = finite_kernel_pull(pi, uniform_measure(pi.target));

    CHECK(mu(set_of(c4, {a})) == rat(1, 4));                 // (X)_1 = X
    CHECK(mu(full_subgroup(c4).members) == Rational(1));     // (G)_n = G
    CHECK(mu(set_of(c4, {0, sq})) == rat(1, 2));             // the kernel, (X)_2 = X
}

TEST_CASE("both constructions yield invariant measures, exhaustively") {
    auto s3 = symmetric_group(3);
    int rot = s3->index_of(Permutation({1, 2, 0}));
    int swap01 = s3->index_of(Permutation({1, 0, 2}));
    std::vector<int> rg{rot};
    auto a3 = subgroup_generated(s3, rg);
    auto extended = finite_index_extend(s3, uniform_measure_on(s3, a3), {0, swap01});
    auto audit1 = audit_measure(extended);
    CHECK(audit1.exhaustive);
    CHECK(audit1.ok());

    auto c4 = cyclic_group(4);
    int a = c4->index_of(Permutation({1, 2, 3, 0}));
    int sq = c4->mul(a, a);
    std::vector<int> sg{sq};
    auto pi = quotient_map(c4, subgroup_generated(c4, sg));
    auto pulled = finite_kernel_pull(pi, uniform_measure(pi.target));
    auto audit2 = audit_measure(pulled);
    CHECK(audit2.exhaustive);
    CHECK(audit2.ok());

    // the measure must be fed on the epimorphism's own target realization
    CHECK_THROWS_WITH_AS((void)finite_kernel_pull(pi, uniform_measure(cyclic_group(2))),
                         doctest::Contains("BadTower"), ValidationError);
}

TEST_CASE("constructions reproduce the uniform measure") {
    // On a finite group the invariant probability measure is unique, so both
    // combinators must collapse to it when fed uniform inputs.
    auto s3 = symmetric_group(3);
    int rot = s3->index_of(Permutation({1, 2, 0}));
    int swap01 = s3->index_of(Permutation({1, 0, 2}));
    std::vector<int> rg{rot};
    auto a3 = subgroup_generated(s3, rg);
    auto extended = finite_index_extend(s3, uniform_measure_on(s3, a3), {0, swap01});
    auto uniform = uniform_measure(s3);
    for (uint64_t mask = 0; mask < 64; ++mask) {
        ElemSet X(s3->order());
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) X.set(i);
        CHECK(extended(X) == uniform(X));
    }
}

TEST_CASE("sampled audit on a larger group") {
    auto f20 = FiniteGroup::from_generators(
        5, {Permutation({1, 2, 3, 4, 0}), Permutation({0, 2, 4, 1, 3})});
    int five = f20->index_of(Permutation({1, 2, 3, 4, 0}));
    std::vector<int> fg{five};
    auto c5 = subgroup_generated(f20, fg);
    // transversal of C5 in F20: powers of the order-4 element
    int b = f20->index_of(Permutation({0, 2, 4, 1, 3}));
    std::vector<int> reps{0, b, f20->mul(b, b), f20->mul(f20->mul(b, b), b)};
    auto mu = finite_index_extend(f20, uniform_measure_on(f20, c5), reps);
    auto audit = audit_measure(mu, 4096, 400, 99);
    CHECK_FALSE(audit.exhaustive);
    CHECK(audit.ok());
}
