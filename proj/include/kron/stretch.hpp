#pragma once

#include <optional>

#include "kron/engine.hpp"
#include "kron/quasipolynomial.hpp"

namespace kron {

// =============================================================================
// Stretching quasipolynomials. The stretching function of a triple is
// N |-> g_{N*mu, N*nu}^{N*lambda}; it is a quasipolynomial in N. This module
// samples it exactly, fits the branches by exact rational interpolation with
// held-out validation points, extracts the ray decomposition
//
//     g~(N) = Q * N^2/4 + L * N/2 + Delta(parity of N)
//
// when the branches share their quadratic and linear coefficients, and
// evaluates the saturation / positivity checks and the shifted-index
// variants:
//
//   saturated (index form): every branch that is not identically zero is
//     strictly positive at every integer n >= 1. The saturation index s(f)
//     is the least shift making f(n + s) saturated; the positivity index
//     p(f) is the least shift making every branch coefficient nonnegative.
//
//   saturated (value-at-1 form, used by check_strong_sh): f(1) = 0 forces
//     the branch containing N = 1 to vanish identically.
//
// The two saturation readings are deliberately kept as separate operations.
// Branch positivity over all integers n >= from is decided exactly: the
// leading coefficient fixes the sign beyond the Cauchy root bound
// 1 + max |a_i / a_d|, and the finitely many integers below the bound are
// evaluated in exact arithmetic.
// =============================================================================

struct StretchSamples {
    KronTriple triple;
    std::vector<std::pair<long long, long long>> values; // (N, g at N)
    Method method = Method::Auto;
};

inline StretchSamples sample_stretch(const KronTriple& t, long long N_max,
                                     KronOracle* oracle = nullptr) {
    if (N_max < 1) throw ParameterError("sample_stretch needs N_max >= 1");
    require_equal_weights(t);
    StretchSamples s;
    s.triple = t;
    auto rotated = rotate_to_two_row(t, 4);
    s.method = rotated ? Method::Rosas : Method::Oracle;
    for (long long N = 1; N <= N_max; ++N) {
        long long g;
        if (rotated) {
            KronTriple tn = rotated->stretched(N);
            if (tn.lambda.length() > 3) {
                auto reduced = reduce_by_determinants(tn, 2, 2);
                g = reduced ? kron_two_row(*reduced) : 0;
            } else {
                g = kron_two_row(tn);
            }
        } else {
            if (!oracle)
                throw OracleOverflow("shapes outside the two-row family need the oracle");
            g = oracle->kron_oracle(t.stretched(N));
        }
        s.values.emplace_back(N, g);
    }
    return s;
}

// Exact fit: per residue class, interpolate through the first degree+1
// samples and check the remaining ones. Requires at least one validation
// point in every class.
inline QuasiPolynomial fit_quasipolynomial(const StretchSamples& s, long long period,
                                           long long degree) {
    if (period < 1) throw ParameterError("period must be >= 1");
    if (degree < 0) throw ParameterError("degree must be >= 0");
    std::vector<Polynomial> branches(static_cast<std::size_t>(period));
    for (long long r = 1; r <= period; ++r) {
        std::vector<std::pair<Rational, Rational>> pts;
        std::vector<std::pair<long long, long long>> rest;
        for (const auto& [N, g] : s.values) {
            if ((N - 1) % period + 1 != r) continue;
            if (static_cast<long long>(pts.size()) <= degree)
                pts.emplace_back(Rational(N), Rational(g));
            else
                rest.emplace_back(N, g);
        }
        if (static_cast<long long>(pts.size()) <= degree || rest.empty())
            throw InsufficientSamples(
                "need at least degree+2 samples in every residue class; raise N_max to >= " +
                std::to_string(period * (degree + 2)));
        Polynomial p = Polynomial::interpolate(pts);
        for (const auto& [N, g] : rest) {
            if (p.evaluate(Rational(N)) != Rational(g))
                throw FitMismatch("validation failed at N = " + std::to_string(N) +
                                  "; raise the period or degree");
        }
        branches[std::size_t(r - 1)] = std::move(p);
    }
    return QuasiPolynomial(period, std::move(branches));
}

// Ray decomposition data: g~(N) = Q*N^2/4 + L*N/2 + Delta(parity of N).
struct ShapeDecomposition {
    long long Q = 0;
    long long L = 0;
    Rational delta_even;
    Rational delta_odd;
};

inline ShapeDecomposition decompose_shape(const QuasiPolynomial& f) {
    if (f.period() != 2)
        throw ShapeDecompositionError("shape decomposition needs period 2");
    const Polynomial& odd = f.branch(1);
    const Polynomial& even = f.branch(2);
    if (odd.degree() > 2 || even.degree() > 2)
        throw ShapeDecompositionError("shape decomposition needs degree <= 2");
    if (odd.coeff(2) != even.coeff(2) || odd.coeff(1) != even.coeff(1))
        throw ShapeDecompositionError(
            "branches disagree in their quadratic or linear coefficients");
    Rational q4 = odd.coeff(2) * Rational(4);
    Rational l2 = odd.coeff(1) * Rational(2);
    if (!q4.is_integer() || !l2.is_integer())
        throw ShapeDecompositionError("Q or L is not integral");
    ShapeDecomposition d;
    d.Q = q4.to_int();
    d.L = l2.to_int();
    d.delta_even = even.coeff(0);
    d.delta_odd = odd.coeff(0);
    return d;
}

// Saturation in the value-at-1 sense: f(1) = 0 must force the branch
// containing N = 1 to vanish identically.
inline bool check_strong_sh(const QuasiPolynomial& f) {
    return !(f.evaluate(1).is_zero() && !f.branch(1).is_zero());
}

// Positivity: every coefficient of every branch is nonnegative.
inline bool check_strong_ph2(const QuasiPolynomial& f) {
    return f.all_coefficients_nonnegative();
}

// Exact decision of p(n) > 0 for every integer n >= from.
inline bool positive_on_integers_from(const Polynomial& p, long long from) {
    if (p.is_zero()) return false;
    const auto& c = p.coefficients();
    Rational lead = c.back();
    if (p.degree() == 0) return lead > Rational(0);
    if (!(lead > Rational(0))) return false; // eventually negative
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational ratio = (c[i].is_negative() ? -c[i] : c[i]) / lead;
        if (ratio > bound - Rational(1)) bound = ratio + Rational(1);
    }
    long long last = checked_narrow(bound.floor()) + 1;
    for (long long n = from; n <= last; ++n)
        if (!(p.evaluate(Rational(n)) > Rational(0))) return false;
    return true;
}

enum class SaturationDomain {
    AllIntegers,  // every branch positive at every integer n >= 1
    ResidueClass, // every branch positive on its own residue class only
};

inline bool is_saturated_quasipolynomial(const QuasiPolynomial& f,
                                         SaturationDomain domain) {
    for (long long i = 1; i <= f.period(); ++i) {
        const Polynomial& b = f.branch(i);
        if (b.is_zero()) continue;
        if (domain == SaturationDomain::AllIntegers) {
            if (!positive_on_integers_from(b, 1)) return false;
        } else {
            // Restrict to the class n = i, i+k, i+2k, ...: positivity there
            // is positivity of r(u) = b(i - k + k*u) at every integer u >= 1.
            // r is recovered exactly by interpolation through degree+1 points.
            std::vector<std::pair<Rational, Rational>> pts;
            for (long long u = 1; u <= b.degree() + 1; ++u)
                pts.emplace_back(Rational(u), b.evaluate(Rational(i - f.period() + f.period() * u)));
            Polynomial r = Polynomial::interpolate(pts);
            if (!positive_on_integers_from(r, 1)) return false;
        }
    }
    return true;
}

// Smallest shift s with f(n + s) saturated; nullopt when the cap is passed.
inline std::optional<long long> saturation_index(const QuasiPolynomial& f, long long cap,
                                                 SaturationDomain domain =
                                                     SaturationDomain::AllIntegers) {
    QuasiPolynomial g = f;
    for (long long s = 0; s <= cap; ++s) {
        if (is_saturated_quasipolynomial(g, domain)) return s;
        g = g.shifted(1);
    }
    return std::nullopt;
}

// Smallest shift p with all branch coefficients of f(n + p) nonnegative.
inline std::optional<long long> positivity_index(const QuasiPolynomial& f, long long cap) {
    QuasiPolynomial g = f;
    for (long long p = 0; p <= cap; ++p) {
        if (g.all_coefficients_nonnegative()) return p;
        g = g.shifted(1);
    }
    return std::nullopt;
}

struct HypothesisReport {
    QuasiPolynomial quasipolynomial;
    bool strong_sh_holds = false;
    bool strong_ph2_holds = false;
    std::optional<long long> saturation_idx;        // nullopt: exceeded cap
    std::optional<long long> saturation_idx_class;  // set when it differs
    std::optional<long long> positivity_idx;        // nullopt: exceeded cap
    std::optional<ShapeDecomposition> shape;
};

struct AnalyzeOptions {
    long long N_max = 8;
    long long period = 2;
    long long degree = 2;
    long long cap = 100;
    SaturationDomain saturation_domain = SaturationDomain::AllIntegers;
};

inline HypothesisReport analyze_quasipolynomial(const QuasiPolynomial& f,
                                                const AnalyzeOptions& opt) {
    HypothesisReport rep;
    rep.quasipolynomial = f;
    rep.strong_sh_holds = check_strong_sh(f);
    rep.strong_ph2_holds = check_strong_ph2(f);
    rep.saturation_idx = saturation_index(f, opt.cap, opt.saturation_domain);
    auto other = saturation_index(f, opt.cap,
                                  opt.saturation_domain == SaturationDomain::AllIntegers
                                      ? SaturationDomain::ResidueClass
                                      : SaturationDomain::AllIntegers);
    if (other != rep.saturation_idx) rep.saturation_idx_class = other;
    rep.positivity_idx = positivity_index(f, opt.cap);
    if (f.period() == 2 && f.degree() <= 2) {
        try {
            rep.shape = decompose_shape(f);
        } catch (const ShapeDecompositionError&) {
            // branches with unequal leading coefficients: no ray decomposition
        }
    }
    return rep;
}

inline HypothesisReport analyze_triple(const KronTriple& t, const AnalyzeOptions& opt,
                                       KronOracle* oracle = nullptr) {
    StretchSamples s = sample_stretch(t, opt.N_max, oracle);
    QuasiPolynomial f = fit_quasipolynomial(s, opt.period, opt.degree);
    return analyze_quasipolynomial(f, opt);
}

// Shifted reconstruction identity along a ray with decomposition (Q, L):
//   g~(N+1) = N^2/4 * Q + N/2 * (L + Q) + g~(1)
// holds for even N, and for every N when the two Delta values coincide.
inline bool verify_shift_identity(const QuasiPolynomial& f, const ShapeDecomposition& d,
                                  long long N_limit) {
    Rational g1 = f.evaluate(1);
    for (long long N = 1; N + 1 <= N_limit; ++N) {
        if (N % 2 != 0 && d.delta_even != d.delta_odd) continue;
        Rational rhs = Rational(d.Q) * Rational(N) * Rational(N) / Rational(4) +
                       Rational(d.L + d.Q) * Rational(N) / Rational(2) + g1;
        if (f.evaluate(N + 1) != rhs) return false;
    }
    return true;
}

} // namespace kron
