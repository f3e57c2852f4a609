#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

using int128 = __int128;
using uint128 = unsigned __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("128-bit addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("128-bit subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("128-bit multiplication overflow");
    return r;
}

inline long long checked_narrow(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw ArithmeticOverflow("value does not fit in 64 bits");
    return static_cast<long long>(v);
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    uint128 u = neg ? uint128(0) - uint128(v) : uint128(v);
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

// Signed arbitrary-precision integer, little-endian 64-bit limbs.
// Only the operations the character-sum oracle needs: signed accumulation,
// multiplication by machine integers, and exact division by small divisors.
class BigInt {
public:
    BigInt() = default;

    BigInt(int128 v) { // NOLINT(google-explicit-constructor)
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        uint128 u = v < 0 ? uint128(0) - uint128(v) : uint128(v);
        mag_.push_back(std::uint64_t(u));
        if (std::uint64_t hi = std::uint64_t(u >> 64)) mag_.push_back(hi);
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    void negate() { sign_ = -sign_; }

    BigInt& operator+=(const BigInt& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(mag_, o.mag_);
            return *this;
        }
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
        if (c > 0) {
            sub_mag(mag_, o.mag_);
        } else {
            std::vector<std::uint64_t> tmp = o.mag_;
            sub_mag(tmp, mag_);
            mag_ = std::move(tmp);
            sign_ = o.sign_;
        }
        return *this;
    }

    BigInt& operator-=(const BigInt& o) {
        BigInt t = o;
        t.negate();
        return *this += t;
    }

    void mul_u64(std::uint64_t m) {
        if (sign_ == 0) return;
        if (m == 0) { sign_ = 0; mag_.clear(); return; }
        uint128 carry = 0;
        for (auto& limb : mag_) {
            uint128 cur = uint128(limb) * m + carry;
            limb = std::uint64_t(cur);
            carry = cur >> 64;
        }
        if (carry) mag_.push_back(std::uint64_t(carry));
    }

    void mul_i128(int128 m) {
        if (m == 0) { sign_ = 0; mag_.clear(); return; }
        if (sign_ == 0) return;
        if (m < 0) { sign_ = -sign_; }
        uint128 u = m < 0 ? uint128(0) - uint128(m) : uint128(m);
        std::uint64_t lo = std::uint64_t(u), hi = std::uint64_t(u >> 64);
        if (hi == 0) { mul_u64(lo); return; }
        BigInt high_part = *this;
        high_part.mul_u64(hi);
        high_part.shift_limbs(1);
        mul_u64(lo);
        int s = sign_;
        sign_ = 1;
        high_part.sign_ = 1;
        *this += high_part;
        sign_ = s;
    }

    // Divides in place, returns the remainder. Divisor must be positive;
    // remainder has the magnitude's sign folded out (callers below always
    // demand an exact division anyway).
    std::uint64_t divmod_u64(std::uint64_t d) {
        if (d == 0) throw ArithmeticOverflow("division by zero");
        if (sign_ == 0) return 0;
        uint128 rem = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) {
            uint128 cur = (rem << 64) | mag_[i];
            mag_[i] = std::uint64_t(cur / d);
            rem = cur % d;
        }
        trim();
        return std::uint64_t(rem);
    }

    void div_exact_u64(std::uint64_t d) {
        if (divmod_u64(d) != 0)
            throw ArithmeticOverflow("expected exact division");
    }

    int128 to_i128() const {
        if (sign_ == 0) return 0;
        if (mag_.size() > 2)
            throw ArithmeticOverflow("BigInt does not fit in 128 bits");
        uint128 u = mag_[0];
        if (mag_.size() == 2) u |= uint128(mag_[1]) << 64;
        uint128 limit = sign_ > 0 ? (uint128(1) << 127) - 1 : (uint128(1) << 127);
        if (u > limit)
            throw ArithmeticOverflow("BigInt does not fit in 128 bits");
        return sign_ > 0 ? int128(u) : -int128(u - 1) - 1;
    }

    bool operator==(const BigInt& o) const {
        return sign_ == o.sign_ && mag_ == o.mag_;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        BigInt t = *this;
        std::string s;
        while (!t.is_zero()) {
            std::uint64_t r = t.divmod_u64(1000000000000000000ULL);
            if (t.is_zero()) {
                s = std::to_string(r) + s;
            } else {
                std::string chunk = std::to_string(r);
                s = std::string(18 - chunk.size(), '0') + chunk + s;
            }
        }
        return (sign_ < 0 ? "-" : "") + s;
    }

private:
    int sign_ = 0;
    std::vector<std::uint64_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void shift_limbs(std::size_t n) {
        if (sign_ == 0 || n == 0) return;
        mag_.insert(mag_.begin(), n, 0);
    }

    static int cmp_mag(const std::vector<std::uint64_t>& a,
                       const std::vector<std::uint64_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        uint128 carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            uint128 cur = uint128(a[i]) + (i < b.size() ? b[i] : 0) + carry;
            a[i] = std::uint64_t(cur);
            carry = cur >> 64;
        }
        if (carry) a.push_back(std::uint64_t(carry));
    }

    // requires |a| >= |b|
    static void sub_mag(std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t bi = i < b.size() ? b[i] : 0;
            std::uint64_t cur = a[i] - bi - borrow;
            borrow = (a[i] < bi + borrow || (bi == UINT64_MAX && borrow)) ? 1 : 0;
            a[i] = cur;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
};

inline BigInt factorial_big(int n) {
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r.mul_u64(std::uint64_t(i));
    return r;
}

} // namespace kron
