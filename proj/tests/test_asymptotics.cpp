#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galmeasure/asymptotics.hpp"
#include "galmeasure/catalog.hpp"

using namespace galmeas;

namespace {
Rational rat(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }
}

TEST_CASE("omega sums of the squares forms") {
    auto squares = catalog_scenario("squares");
    auto trivial = closed_form(squares, "trivial");
    auto full = closed_form(squares, "full");

    auto r1 = omega_sum(trivial, 1);
    CHECK_FALSE(r1.infinite);
    CHECK(r1.value == Rational(1));
    auto r2 = omega_sum(trivial, 2);
    CHECK(r2.value == rat(1, 2));

    auto rf = omega_sum(full, 1);
    CHECK(rf.infinite);

    SignedPowerSum zero;
    zero.base = 3;
    CHECK(omega_sum(zero, 1).value == Rational(0));
    CHECK_FALSE(omega_sum(zero, 1).infinite);
}

TEST_CASE("omega sum telescopes") {
    auto fifth = catalog_scenario("fifth-root");
    for (auto name : {"image", "full"}) {
        auto form = closed_form(fifth, name);
        for (int s = 1; s <= 4; ++s) {
            auto whole = omega_sum(form, s);
            auto tail = omega_sum(form, s + 1);
            if (whole.infinite) {
                CHECK(tail.infinite);
            } else {
                CHECK(whole.value == form.evaluate(s) + tail.value);
            }
        }
    }
}

TEST_CASE("forms with exceptional leading values") {
    // valid only from e1 = 3 on; explicit values below
    SignedPowerSum form;
    form.base = 4;
    form.e1 = 3;
    form.terms.push_back({BigInt(1), 2});
    form.prefix = {{1, rat(1, 3)}, {2, rat(1, 7)}};
    CHECK(form.evaluate(1) == rat(1, 3));
    CHECK(form.evaluate(2) == rat(1, 7));
    CHECK(form.evaluate(3) == rat(1, 8));
    CHECK(form.evaluate(4) == rat(1, 16));

    // sum = 1/3 + 1/7 + sum_{e>=3} 2^-e = 1/3 + 1/7 + 1/4
    auto whole = omega_sum(form, 1);
    CHECK_FALSE(whole.infinite);
    CHECK(whole.value == rat(1, 3) + rat(1, 7) + rat(1, 4));
    // starting inside the prefix region keeps only the later exceptional value
    CHECK(omega_sum(form, 2).value == rat(1, 7) + rat(1, 4));
    // starting past the prefix ignores it entirely
    CHECK(omega_sum(form, 3).value == rat(1, 4));
    CHECK(ultralimit(form).value == 0);
}

TEST_CASE("ultralimits take only the values 0 and 1") {
    auto squares = catalog_scenario("squares");
    CHECK(ultralimit(closed_form(squares, "trivial")).value == 0);
    CHECK(ultralimit(closed_form(squares, "full")).value == 1);

    SignedPowerSum one;
    one.base = 7;
    one.terms.push_back({BigInt(1), 7});
    CHECK(ultralimit(one).value == 1);

    SignedPowerSum bad;
    bad.base = 4;
    bad.terms.push_back({BigInt(3), 4});
    CHECK_THROWS_WITH_AS((void)ultralimit(bad), doctest::Contains("NotZeroOne"), ValidationError);
}

TEST_CASE("every catalog form has a 0/1 limit, 1 exactly for the full class") {
    for (auto id : {"squares", "fifth-root", "s5-transposition", "wreath-5-2"}) {
        auto s = catalog_scenario(id);
        const auto& L = *s.lattice();
        int full_class = L.class_of(L.full_node());
        int ones = 0;
        for (const auto& t : s.targets()) {
            auto lim = ultralimit(closed_form(s, t.name));
            if (t.class_id == full_class) {
                CHECK(lim.value == 1);
                ++ones;
            } else {
                CHECK(lim.value == 0);
            }
        }
        CHECK(ones == 1);
    }
}

TEST_CASE("omega sum is finite exactly off the generic class, with rational value") {
    auto fifth = catalog_scenario("fifth-root");
    auto image = omega_sum(closed_form(fifth, "image"), 1);
    CHECK_FALSE(image.infinite);
    // sum_{e>=1} 5^(1-e) = 5/4... evaluated from the exact form
    CHECK(image.value == rat(5, 4));
    CHECK(omega_sum(closed_form(fifth, "full"), 1).infinite);
}

TEST_CASE("generic target detection") {
    CHECK(generic_target(catalog_scenario("squares")) == "full");
    CHECK(generic_target(catalog_scenario("fifth-root")) == "full");
    CHECK(generic_target(catalog_scenario("wreath-5-2")) == "full");

    // A scenario with trivial G0: the unique regular class is [G], measure 1 at every e.
    auto c4 = cyclic_group(4);
    int a = c4->index_of(Permutation({1, 2, 3, 0}));
    auto s = CoverScenario::make("test:allbase", c4, {}, std::vector<int>{a}, {{"full", {a}}});
    for (int e = 1; e <= 4; ++e)
        CHECK(measure_at(s, e).target("full").value == Rational(1));
    CHECK(generic_target(s) == "full");

    // [G] missing from the declared targets
    auto fifth = catalog_scenario("fifth-root");
    int c4gen = fifth.group()->index_of(Permutation({0, 2, 4, 1, 3}));
    auto only_image = fifth.with_targets({{"image", {c4gen}}});
    CHECK_THROWS_WITH_AS((void)generic_target(only_image), doctest::Contains("GenericMissing"),
                         ValidationError);
}
