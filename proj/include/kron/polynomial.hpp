#pragma once

#include <vector>

#include "kron/rational.hpp"

namespace kron {

// Univariate polynomial with exact rational coefficients, ascending order.
// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const Rational& c) {
        return Polynomial(std::vector<Rational>{c});
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational evaluate(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
        return Polynomial(std::move(out));
    }

    Polynomial scaled(const Rational& c) const {
        std::vector<Rational> out(coeffs_);
        for (auto& a : out) a = a * c;
        return Polynomial(std::move(out));
    }

    // p(x) * (x - a)
    Polynomial times_linear(const Rational& a) const {
        std::vector<Rational> out(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i + 1] += coeffs_[i];
            out[i] -= coeffs_[i] * a;
        }
        return Polynomial(std::move(out));
    }

    // q(x) = p(x + c), expanded exactly via the binomial theorem.
    Polynomial shifted_arg(long long c) const {
        if (c == 0 || is_zero()) return *this;
        std::size_t n = coeffs_.size();
        // Pascal triangle of C(k, j) for k < n.
        std::vector<std::vector<Rational>> binom(n);
        for (std::size_t k = 0; k < n; ++k) {
            binom[k].resize(k + 1);
            binom[k][0] = Rational(1);
            binom[k][k] = Rational(1);
            for (std::size_t j = 1; j < k; ++j)
                binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
        }
        std::vector<Rational> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            Rational cpow(1);
            for (std::size_t j = k + 1; j-- > 0;) {
                // contribution a_k * C(k, j) * c^(k-j) to x^j
                out[j] += coeffs_[k] * binom[k][j] * cpow;
                if (j > 0) cpow = cpow * Rational(c);
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    std::string str(const std::string& var = "N") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += coeffs_[i].is_negative() ? " - " : " + ";
            else if (coeffs_[i].is_negative()) s += "-";
            Rational a = coeffs_[i].is_negative() ? -coeffs_[i] : coeffs_[i];
            bool unit = a == Rational(1);
            if (i == 0 || !unit) s += a.str();
            if (i >= 1) {
                if (!unit) s += "*";
                s += var;
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    // Interpolating polynomial through the given points (Lagrange form,
    // exact arithmetic). The x_i must be pairwise distinct.
    static Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
        Polynomial acc;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Polynomial basis = Polynomial::constant(Rational(1));
            Rational denom(1);
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (i == j) continue;
                basis = basis.times_linear(pts[j].first);
                denom = denom * (pts[i].first - pts[j].first);
            }
            acc = acc + basis.scaled(pts[i].second / denom);
        }
        return acc;
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

} // namespace kron
