#pragma once

#include <vector>

#include "kron/polynomial.hpp"

namespace kron {

// Quasipolynomial with period k: one polynomial branch per residue class,
// with class representatives 1..k (branch k governs N ≡ 0 mod k). Branch
// indices are 1-based throughout to match that convention.
class QuasiPolynomial {
public:
    QuasiPolynomial() : period_(1), branches_(1) {}

    QuasiPolynomial(long long period, std::vector<Polynomial> branches)
        : period_(period), branches_(std::move(branches)) {
        if (period_ < 1) throw ParameterError("quasipolynomial period must be >= 1");
        if (static_cast<long long>(branches_.size()) != period_)
            throw ParameterError("quasipolynomial needs exactly one branch per residue class");
    }

    static QuasiPolynomial constant(const Rational& c, long long period = 1) {
        return QuasiPolynomial(period,
                               std::vector<Polynomial>(std::size_t(period),
                                                       Polynomial::constant(c)));
    }

    long long period() const { return period_; }

    const Polynomial& branch(long long i) const {
        if (i < 1 || i > period_) throw ParameterError("branch index out of range");
        return branches_[std::size_t(i - 1)];
    }

    const std::vector<Polynomial>& branches() const { return branches_; }

    long long branch_index_for(long long n) const {
        if (n < 1) throw ParameterError("quasipolynomial argument must be >= 1");
        return (n - 1) % period_ + 1;
    }

    Rational evaluate(long long n) const {
        return branch(branch_index_for(n)).evaluate(Rational(n));
    }

    bool is_zero() const {
        for (const auto& b : branches_)
            if (!b.is_zero()) return false;
        return true;
    }

    long long degree() const {
        long long d = -1;
        for (const auto& b : branches_) d = std::max(d, b.degree());
        return d;
    }

    // g with g(N) = f(N+c): branch j of g is the branch of f that handles
    // the residue of j+c, composed with N -> N+c.
    QuasiPolynomial shifted(long long c) const {
        if (c < 0) throw ParameterError("quasipolynomial shift must be >= 0");
        if (c == 0) return *this;
        std::vector<Polynomial> out(static_cast<std::size_t>(period_));
        for (long long j = 1; j <= period_; ++j) {
            long long src = (j + c - 1) % period_ + 1;
            out[std::size_t(j - 1)] = branch(src).shifted_arg(c);
        }
        return QuasiPolynomial(period_, std::move(out));
    }

    // True when every coefficient of every branch is >= 0.
    bool all_coefficients_nonnegative() const {
        for (const auto& b : branches_)
            for (const auto& a : b.coefficients())
                if (a.is_negative()) return false;
        return true;
    }

    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.period_ == b.period_ && a.branches_ == b.branches_;
    }

private:
    long long period_;
    std::vector<Polynomial> branches_;
};

} // namespace kron
