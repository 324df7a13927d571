#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace galmeas {

struct DivMod;

// Arbitrary-precision signed integer, base 2^32 limbs, little-endian.
// Tuple counts grow like |G|^e, so fixed-width arithmetic is out of the
// question; this covers everything the counting kernel needs (ring ops,
// divmod, pow, gcd, decimal I/O) without pulling in an external dependency.
class BigInt {
public:
    BigInt() = default;  // zero
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);  // throws ValidationError on junk
    static BigInt power(const BigInt& base, unsigned long long exp);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

    bool is_zero() const noexcept { return sign_ == 0; }
    int sign() const noexcept { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated toward zero; remainder has the sign of the dividend.
    // |remainder| < |divisor| always. Division by zero throws.
    DivMod divmod(const BigInt& divisor) const;
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    std::strong_ordering operator<=>(const BigInt& o) const noexcept;
    bool operator==(const BigInt& o) const noexcept = default;

    std::string to_string() const;
    double to_double() const;

    // Fits in long long? (used for report fields that are known small)
    bool fits_int64() const noexcept;
    long long to_int64() const;  // throws if out of range

private:
    int sign_ = 0;                   // -1, 0, +1
    std::vector<uint32_t> mag_;      // empty iff zero, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) noexcept;
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

struct DivMod {
    BigInt quot;
    BigInt rem;
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }

}  // namespace galmeas
