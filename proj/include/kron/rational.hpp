#pragma once

#include <string>

#include "kron/bigint.hpp"
#include "kron/errors.hpp"

namespace kron {

inline int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact rational number over checked 128-bit integers, stored reduced
// with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int128 n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long long n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n) {} // NOLINT(google-explicit-constructor)

    Rational(int128 n, int128 d) : num_(n), den_(d) {
        if (den_ == 0) throw ArithmeticOverflow("rational with zero denominator");
        normalize();
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    long long to_int() const {
        if (den_ != 1) throw ArithmeticOverflow("rational is not an integer");
        return checked_narrow(num_);
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        int128 g = gcd128(a.den_, b.den_);
        int128 bd = b.den_ / g;
        int128 n = checked_add(checked_mul(a.num_, bd),
                               checked_mul(b.num_, a.den_ / g));
        int128 d = checked_mul(a.den_, bd);
        return Rational(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = gcd128(a.num_, b.den_);
        int128 g2 = gcd128(b.num_, a.den_);
        int128 n = checked_mul(a.num_ / g1, b.num_ / g2);
        int128 d = checked_mul(a.den_ / g2, b.den_ / g1);
        return Rational(n, d);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArithmeticOverflow("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Largest integer <= value.
    int128 floor() const {
        int128 q = num_ / den_;
        if (num_ < 0 && num_ % den_ != 0) --q;
        return q;
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = to_string(num_);
        if (den_ != 1) s += "/" + to_string(den_);
        return s;
    }

    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        auto parse_int = [](const std::string& t) -> int128 {
            if (t.empty()) throw ParseError("empty integer in rational");
            std::size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
            if (i == t.size()) throw ParseError("malformed rational: " + t);
            int128 v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9')
                    throw ParseError("malformed rational: " + t);
                v = checked_add(checked_mul(v, 10), t[i] - '0');
            }
            return t[0] == '-' ? -v : v;
        };
        if (slash == std::string::npos) return Rational(parse_int(text));
        return Rational(parse_int(text.substr(0, slash)),
                        parse_int(text.substr(slash + 1)));
    }

private:
    int128 num_ = 0;
    int128 den_ = 1;

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

} // namespace kron
