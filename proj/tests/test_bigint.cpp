#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "galmeasure/bigint.hpp"
#include "galmeasure/errors.hpp"
#include "galmeasure/prng.hpp"
#include "galmeasure/rational.hpp"

using galmeas::BigInt;
using galmeas::Rational;

namespace {

struct Frozen {
    const char* a;
    const char* b;
    const char* prod;
    const char* quot;
    const char* rem;
};

// Expected values computed independently with arbitrary-precision arithmetic
// and frozen here.
const Frozen kFrozen[] = {
    {"618970019642690137449574457", "12157665459056928794",
     "7525230428001722622651068390558279272650214858", "50911914", "1350413257585322741"},
    {"1000000000000000000000000000000000000999999937", "2305843009213693951",
     "2305843009213693951000000000000000002305842863945584370537281087",
     "433680868994201773791060216", "1105750150964046521"},
    {"98765432123456789012345678901234567890", "1234567890987654321",
     "121932631239140373319311091876543210987501905311126352690", "80000000684000004776",
     "493875980197530794"},
    {"1606938044258990275541962092341162602522202993782792835301376", "1000000007",
     "1606938055507556585354894021134897248910341211438213791780925847109632",
     "1606938033010424044468993781058206135114760047979472", "499445072"},
    {"19088056323407827075424486287615602692670648963", "45474735088646411895751953125",
     "868024304664132936314876419038028083954061410759095451794564723968505859375",
     "419750797584602196", "35651375987313097199506586463"},
};

// A random multi-limb integer whose size varies with the draw.
BigInt random_bigint(const galmeas::CounterRng& rng, uint64_t* ctr, bool allow_negative = true) {
    int limbs = 1 + static_cast<int>(rng.below(5, ctr));
    BigInt v(0);
    BigInt shift = BigInt::power(BigInt(2), 32);
    for (int i = 0; i < limbs; ++i) {
        v = v * shift + BigInt(static_cast<long long>(rng.below(1ull << 32, ctr)));
    }
    if (allow_negative && rng.below(2, ctr)) v = -v;
    return v;
}

}  // namespace

TEST_CASE("frozen multiplication and division vectors") {
    for (const auto& f : kFrozen) {
        BigInt a = BigInt::from_string(f.a);
        BigInt b = BigInt::from_string(f.b);
        CHECK((a * b).to_string() == f.prod);
        auto dm = a.divmod(b);
        CHECK(dm.quot.to_string() == f.quot);
        CHECK(dm.rem.to_string() == f.rem);
    }
}

TEST_CASE("small arithmetic and signs") {
    CHECK((BigInt(-7) + BigInt(7)).is_zero());
    CHECK((BigInt(-7) * BigInt(6)).to_string() == "-42");
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(5) - BigInt(9)).to_string() == "-4");
    auto dm = BigInt(-17).divmod(BigInt(5));
    CHECK(dm.quot.to_string() == "-3");
    CHECK(dm.rem.to_string() == "-2");
    CHECK(BigInt(-17) == dm.quot * BigInt(5) + dm.rem);
    CHECK(BigInt(123).fits_int64());
    CHECK(BigInt::from_string("9223372036854775807").to_int64() == 9223372036854775807ll);
    CHECK_FALSE(BigInt::from_string("9223372036854775808").fits_int64());
}

TEST_CASE("powers") {
    CHECK(BigInt::power(BigInt(20), 8).to_string() == "25600000000");
    CHECK(BigInt::power(BigInt(120), 6).to_string() == "2985984000000");
    CHECK(BigInt::power(BigInt(50), 9).to_string() == "1953125000000000");
    CHECK(BigInt::power(BigInt(1999), 5).to_string() == "31920079960009999");
    CHECK(BigInt::power(BigInt(7), 0).to_string() == "1");
    CHECK(BigInt::power(BigInt(0), 5).is_zero());
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(69275412000ll), BigInt(13716531576ll)).to_string() == "138550824");
    CHECK(BigInt::gcd(BigInt(0), BigInt(-12)).to_string() == "12");
    CHECK(BigInt::gcd(BigInt(1), BigInt(999)).to_string() == "1");
}

TEST_CASE("divmod identity on random inputs") {
    // Oracle: re-multiply. Checks q*b + r == a and |r| < |b| with r matching
    // the dividend's sign.
    galmeas::CounterRng rng{0xD1CE5EEDull};
    uint64_t ctr = 0;
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = random_bigint(rng, &ctr);
        BigInt b = random_bigint(rng, &ctr);
        if (b.is_zero()) continue;
        auto dm = a.divmod(b);
        CHECK(dm.quot * b + dm.rem == a);
        CHECK(dm.rem.abs() < b.abs());
        if (!dm.rem.is_zero()) CHECK(dm.rem.sign() == a.sign());
    }
}

TEST_CASE("decimal string round trip") {
    galmeas::CounterRng rng{0xB16B00B5ull};
    uint64_t ctr = 0;
    for (int iter = 0; iter < 100; ++iter) {
        BigInt a = random_bigint(rng, &ctr);
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
    CHECK_THROWS_AS(BigInt::from_string("12x4"), galmeas::ValidationError);
    CHECK_THROWS_AS(BigInt::from_string(""), galmeas::ValidationError);
}

TEST_CASE("rational reduction and arithmetic") {
    Rational half(BigInt(4), BigInt(8));
    CHECK(half.to_string() == "1/2");
    Rational third(BigInt(-2), BigInt(-6));
    CHECK(third.to_string() == "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK((half - third).to_string() == "1/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half / third).to_string() == "3/2");
    CHECK((Rational(1) - Rational(BigInt(1), BigInt(8))).to_string() == "7/8");
    CHECK(Rational(BigInt(3), BigInt(-9)).to_string() == "-1/3");
    CHECK(Rational(0).to_string() == "0/1");
    CHECK(Rational::parse("10/15") == Rational(BigInt(2), BigInt(3)));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), galmeas::ValidationError);
}
