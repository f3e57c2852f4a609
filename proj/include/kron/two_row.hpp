#pragma once

#include <optional>

#include "kron/partition.hpp"

namespace kron {

// =============================================================================
// Kronecker coefficients g_{mu,nu}^lambda for mu, nu with at most two rows
// and lambda with at most three rows, by exact lattice-point counting:
//
//   g = Card(R+ ∩ Z ∩ L) - Card(R- ∩ Z ∩ L)
//
// with, after normalizing so that mu2 >= nu2,
//
//   Z  = { (x,y) : x + y <= mu2 + nu2 + 1  and  y - x >= mu2 - nu2 + 1 }
//   L  = { (x,y) in Z^2 : x + y ≡ mu2 + nu2 + 1  (mod 2) }
//   R+ = [lambda3, lambda2] x [1 + lambda2, 1 + lambda2 + lambda3]
//   R- = [lambda3, lambda2] x [2 + lambda1, 2 + lambda1 + lambda3]
//
// Both rectangles are enumerated directly and filtered by Z and L; the
// rectangles have O(lambda2 * lambda3) integer points, so no closed-form
// case split is needed, and degenerate rows (lambda3 = 0 or lambda2 = 0)
// collapse to segments or points handled by the same closed intervals.
// =============================================================================

struct RosasGeometry {
    long long mu2 = 0, nu2 = 0;               // normalized: mu2 >= nu2
    long long lambda1 = 0, lambda2 = 0, lambda3 = 0;

    bool in_Z(long long x, long long y) const {
        return x + y <= mu2 + nu2 + 1 && y - x >= mu2 - nu2 + 1;
    }
    bool in_L(long long x, long long y) const {
        return ((x + y) & 1) == ((mu2 + nu2 + 1) & 1);
    }

    long long count_rect(long long y_lo, long long y_hi) const {
        long long c = 0;
        for (long long x = lambda3; x <= lambda2; ++x)
            for (long long y = y_lo; y <= y_hi; ++y)
                if (in_Z(x, y) && in_L(x, y)) ++c;
        return c;
    }

    long long count_r_plus() const {
        return count_rect(1 + lambda2, 1 + lambda2 + lambda3);
    }
    long long count_r_minus() const {
        return count_rect(2 + lambda1, 2 + lambda1 + lambda3);
    }
};

inline RosasGeometry rosas_geometry(const KronTriple& t) {
    require_equal_weights(t);
    if (t.mu.length() > 2 || t.nu.length() > 2)
        throw ShapeError("kron_two_row needs mu and nu with at most two rows");
    if (t.lambda.length() > 3)
        throw ShapeError("kron_two_row needs lambda with at most three rows");
    if (t.lambda.weight() > (1LL << 44))
        throw OracleOverflow("weight too large for exact enumeration");
    if ((__int128)(t.lambda.part(2) + 1) * (t.lambda.part(3) + 1) > (1LL << 31))
        throw OracleOverflow("rectangle too large for exact enumeration");
    RosasGeometry geo;
    geo.mu2 = t.mu.part(2);
    geo.nu2 = t.nu.part(2);
    if (geo.mu2 < geo.nu2) std::swap(geo.mu2, geo.nu2); // g symmetric in mu, nu
    geo.lambda1 = t.lambda.part(1);
    geo.lambda2 = t.lambda.part(2);
    geo.lambda3 = t.lambda.part(3);
    return geo;
}

inline long long kron_two_row(const KronTriple& t) {
    RosasGeometry geo = rosas_geometry(t);
    long long g = geo.count_r_plus() - geo.count_r_minus();
    if (g < 0)
        throw Error("internal: negative signed count in two-row formula");
    return g;
}

// Fast zero filter: g can be positive only if l(lambda) <= l(mu) * l(nu).
inline bool length_bound_check(const KronTriple& t) {
    return t.lambda.length() <= t.mu.length() * t.nu.length();
}

// Determinant-twist reduction. With lambda padded to m*n terms and
// k = lambda_{mn}, k1 = m*k, k2 = n*k:
//   - if mu_m < k2 or nu_n < k1 the coefficient is 0 (nullopt);
//   - otherwise g is unchanged by subtracting k from every lambda part,
//     k2 from every mu part and k1 from every nu part.
inline std::optional<KronTriple>
reduce_by_determinants(const KronTriple& t, long long m, long long n) {
    if (m < 1 || n < 1) throw ParameterError("reduction needs m, n >= 1");
    if (t.mu.length() > m)
        throw ShapeError("reduction needs l(mu) <= m");
    if (t.nu.length() > n)
        throw ShapeError("reduction needs l(nu) <= n");
    if (t.lambda.length() > m * n)
        throw ShapeError("reduction needs l(lambda) <= m*n");
    long long k = t.lambda.part(m * n);
    if (k == 0) return t;
    long long k1 = m * k, k2 = n * k;
    if (t.mu.part(m) < k2 || t.nu.part(n) < k1) return std::nullopt;
    std::vector<long long> l, mu, nu;
    for (long long i = 1; i < m * n; ++i) l.push_back(t.lambda.part(i) - k);
    for (long long i = 1; i <= m; ++i) mu.push_back(t.mu.part(i) - k2);
    for (long long i = 1; i <= n; ++i) nu.push_back(t.nu.part(i) - k1);
    return KronTriple{Partition(std::move(l)), Partition(std::move(mu)),
                      Partition(std::move(nu))};
}

// Integer points (x, y) on the horizontal segment x_lo <= x <= x_hi at
// height y with x + y ≡ parity (mod 2). Matches the endpoint rule
// length/2 + {1, 1/2, 0}.
inline long long segment_parity_count(long long x_lo, long long x_hi,
                                      long long y, int parity) {
    if (x_lo > x_hi) throw EmptyRange("segment with x_lo > x_hi");
    if (parity != 0 && parity != 1) throw ParameterError("parity must be 0 or 1");
    // x must have fixed parity (parity - y) mod 2
    long long want = ((parity - y) % 2 + 2) % 2;
    long long first = x_lo + (((want - x_lo) % 2 + 2) % 2);
    if (first > x_hi) return 0;
    return (x_hi - first) / 2 + 1;
}

} // namespace kron
