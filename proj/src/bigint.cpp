#include "galmeasure/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "galmeasure/errors.hpp"

namespace galmeas {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> out;
    out.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - (i < b.size() ? static_cast<int64_t>(b[i]) : 0) - borrow;
        borrow = d < 0;
        if (d < 0) d += static_cast<int64_t>(kBase);
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D on magnitudes; b nonzero.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    const int s = std::countl_zero(b.back());
    const size_t n = b.size();
    std::vector<uint32_t> v(n);
    for (size_t i = n; i-- > 0;) {
        uint64_t x = static_cast<uint64_t>(b[i]) << s;
        if (s && i > 0) x |= b[i - 1] >> (32 - s);
        v[i] = static_cast<uint32_t>(x);
    }
    std::vector<uint32_t> u(a.size() + 1, 0);
    for (size_t i = a.size(); i-- > 0;) {
        uint64_t x = static_cast<uint64_t>(a[i]) << s;
        if (s && i > 0) x |= a[i - 1] >> (32 - s);
        u[i] = static_cast<uint32_t>(x);
    }
    if (s) u[a.size()] = static_cast<uint32_t>(a.back() >> (32 - s));

    const size_t m = a.size() - n;
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            borrow = t < 0;
            if (t < 0) t += static_cast<int64_t>(kBase);
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add divisor back
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s2 = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s2);
                c2 = s2 >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(u.begin(), u.begin() + n);
    if (s) {
        for (size_t i = 0; i < n; ++i) {
            uint64_t x = r[i] >> s;
            if (i + 1 < n) x |= static_cast<uint64_t>(r[i + 1]) << (32 - s);
            r[i] = static_cast<uint32_t>(x);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == o.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, o.mag_);
        return out;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
        out.sign_ = sign_;
        out.mag_ = sub_mag(mag_, o.mag_);
    } else {
        out.sign_ = o.sign_;
        out.mag_ = sub_mag(o.mag_, mag_);
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt out;
    if (sign_ == 0 || o.sign_ == 0) return out;
    out.sign_ = sign_ * o.sign_;
    out.mag_ = mul_mag(mag_, o.mag_);
    return out;
}

DivMod BigInt::divmod(const BigInt& divisor) const {
    if (divisor.sign_ == 0) fail("DivisionByZero", "integer division by zero");
    DivMod out;
    divmod_mag(mag_, divisor.mag_, out.quot.mag_, out.rem.mag_);
    out.quot.sign_ = out.quot.mag_.empty() ? 0 : sign_ * divisor.sign_;
    out.rem.sign_ = out.rem.mag_.empty() ? 0 : sign_;
    return out;
}

BigInt BigInt::operator/(const BigInt& o) const { return divmod(o).quot; }
BigInt BigInt::operator%(const BigInt& o) const { return divmod(o).rem; }

std::strong_ordering BigInt::operator<=>(const BigInt& o) const noexcept {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::power(const BigInt& base, unsigned long long exp) {
    BigInt result(1);
    BigInt b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) fail("ParseError", "empty integer literal");
    BigInt out;
    BigInt chunk_scale(1000000000);
    for (; i < s.size();) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint32_t chunk = 0;
        for (size_t k = 0; k < take; ++k, ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                fail("ParseError", "bad digit in integer literal");
            chunk = chunk * 10 + static_cast<uint32_t>(s[i] - '0');
        }
        BigInt scale = take == 9 ? chunk_scale : BigInt(static_cast<long long>([&] {
                           long long p = 1;
                           for (size_t k = 0; k < take; ++k) p *= 10;
                           return p;
                       }()));
        out = out * scale + BigInt(static_cast<long long>(chunk));
    }
    if (sign < 0) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> work = mag_;
    std::vector<uint32_t> chunks;
    const uint64_t d = 1000000000;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        chunks.push_back(static_cast<uint32_t>(rem));
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

bool BigInt::fits_int64() const noexcept {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t u = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) fail("Overflow", "integer too large for int64 field");
    uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

}  // namespace galmeas
