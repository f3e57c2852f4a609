#pragma once

#include "kron/oracle.hpp"
#include "kron/partition.hpp"

namespace kron {

// Index of a reduced Kronecker coefficient g-bar_{alpha,beta}^gamma.
// The three partitions may have unequal weights.
struct ReducedIndex {
    Partition gamma;
    Partition alpha;
    Partition beta;
};

// =============================================================================
// Reduced Kronecker coefficients and the recovery of ordinary Kronecker
// coefficients from them.
//
// For two one-row shapes, g-bar_{(mu2)(nu2)}^{(l2,l3)} counts the integer
// solutions (x, y) of
//
//     x >= mu2,  y >= 0,
//     mu2 + nu2 - l2 <= x + y <= mu2 + nu2 - l3,
//     l2 <= x - y <= l2 + l3,
//
// enumerated over the finite box forced by the x+y upper bound. In general
// the reduced coefficient is the stable value of the prepended sequence
// g_{(n-|alpha|,alpha)(n-|beta|,beta)}^{(n-|gamma|,gamma)}, reached at
// n0 = |alpha| + |beta| + alpha_1 + beta_1 + 2|gamma|; rkron_stabilized
// evaluates the character oracle there and re-checks at n0 + 1.
// =============================================================================

inline long long rkron_one_row(long long mu2, long long nu2, long long lambda2,
                               long long lambda3) {
    if (mu2 < 0 || nu2 < 0 || lambda2 < 0 || lambda3 < 0)
        throw ShapeError("rkron_one_row needs nonnegative arguments");
    if (lambda2 < lambda3)
        throw ShapeError("rkron_one_row needs lambda2 >= lambda3");
    if (mu2 < nu2) std::swap(mu2, nu2); // g-bar symmetric in its lower indices
    // the box has at most (nu2 - lambda3 + 1)^2 points; keep the loop and
    // the int64 predicate arithmetic comfortably bounded
    if (mu2 > (1LL << 44) || lambda2 > (1LL << 44))
        throw OracleOverflow("index too large for exact enumeration");
    long long width = std::max<long long>(nu2 - lambda3 + 1, 0);
    if ((__int128)width * width > (1LL << 32))
        throw OracleOverflow("index too large for exact enumeration");
    long long hi = mu2 + nu2 - lambda3;
    long long count = 0;
    for (long long x = mu2; x <= hi; ++x)
        for (long long y = 0; y <= hi - x; ++y) {
            if (x + y < mu2 + nu2 - lambda2) continue;
            long long d = x - y;
            if (d < lambda2 || d > lambda2 + lambda3) continue;
            ++count;
        }
    return count;
}

// lambda^{dagger i}: increment the first i-1 parts, drop the i-th, keep the
// rest (on the zero-padded view). The result is always nonincreasing since
// 1 + lambda_{i-1} >= lambda_{i+1}; the validity flag is kept so callers can
// assert it.
struct DaggerResult {
    std::vector<long long> entries; // trailing zeros stripped
    bool is_partition = false;

    Partition partition() const {
        if (!is_partition) throw ShapeError("dagger result is not a partition");
        return Partition(entries);
    }
};

inline DaggerResult dagger(const Partition& lambda, long long i) {
    if (i < 1) throw ParameterError("dagger index must be >= 1");
    std::vector<long long> out;
    for (long long j = 1; j < i; ++j) out.push_back(lambda.part(j) + 1);
    for (long long j = i + 1; j <= std::max(lambda.length(), i); ++j)
        out.push_back(lambda.part(j));
    while (!out.empty() && out.back() == 0) out.pop_back();
    DaggerResult r;
    r.is_partition = true;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (out[j] < 0) r.is_partition = false;
        if (j > 0 && out[j] > out[j - 1]) r.is_partition = false;
    }
    r.entries = std::move(out);
    return r;
}

inline void require_two_two_row(const KronTriple& t, const char* who) {
    require_equal_weights(t);
    if (t.mu.length() > 2 || t.nu.length() > 2)
        throw ShapeError(std::string(who) + " needs mu and nu with at most two rows");
    if (t.lambda.length() > 3)
        throw ShapeError(std::string(who) + " needs lambda with at most three rows");
}

// g_{(mu1,mu2)(nu1,nu2)}^{(l1,l2,l3)} =
//   g-bar^{(l2,l3)} - g-bar^{(l1+1,l3)} + g-bar^{(l1+1,l2+1)},
// all three with lower indices (mu2), (nu2).
inline long long kron_from_reduced_2x2(const KronTriple& t) {
    require_two_two_row(t, "kron_from_reduced_2x2");
    long long mu2 = t.mu.part(2), nu2 = t.nu.part(2);
    long long l1 = t.lambda.part(1), l2 = t.lambda.part(2), l3 = t.lambda.part(3);
    long long g = rkron_one_row(mu2, nu2, l2, l3)
                - rkron_one_row(mu2, nu2, l1 + 1, l3)
                + rkron_one_row(mu2, nu2, l1 + 1, l2 + 1);
    if (g < 0)
        throw Error("internal: negative coefficient from reduced recovery");
    return g;
}

// Stable value of the prepended sequence at the bound
// n0 = |alpha| + |beta| + alpha_1 + beta_1 + 2|gamma|, with an equality
// check at n0 + 1 as a stabilization sanity check.
inline long long rkron_stabilized(const ReducedIndex& idx, KronOracle& oracle) {
    long long n0 = idx.alpha.weight() + idx.beta.weight() + idx.alpha.part(1) +
                   idx.beta.part(1) + 2 * idx.gamma.weight();
    auto prepend = [](const Partition& p, long long n) {
        long long head = n - p.weight();
        if (head < p.part(1))
            throw ShapeError("prepended first entry breaks monotonicity");
        std::vector<long long> parts;
        parts.push_back(head);
        for (long long q : p.parts()) parts.push_back(q);
        return Partition(std::move(parts));
    };
    auto eval = [&](long long n) {
        if (n > oracle.max_n())
            throw OracleOverflow("stabilization bound " + std::to_string(n) +
                                 " exceeds the oracle limit " +
                                 std::to_string(oracle.max_n()));
        return oracle.kron_oracle({prepend(idx.gamma, n), prepend(idx.alpha, n),
                                   prepend(idx.beta, n)});
    };
    long long value = eval(n0);
    if (eval(n0 + 1) != value)
        throw Error("internal: sequence not stationary at the stabilization bound");
    return value;
}

// Recovery of an ordinary Kronecker coefficient as the alternating sum of
// reduced coefficients over the dagger transforms of lambda.
inline long long kron_from_reduced_general(const KronTriple& t, long long l1,
                                           long long l2, KronOracle& oracle) {
    require_equal_weights(t);
    if (l1 < 1 || l2 < 1) throw ParameterError("recovery needs l1, l2 >= 1");
    if (t.mu.length() > l1)
        throw ShapeError("kron_from_reduced_general needs l(mu) <= l1");
    if (t.nu.length() > l2)
        throw ShapeError("kron_from_reduced_general needs l(nu) <= l2");
    if (t.lambda.length() > l1 * l2)
        throw ShapeError("kron_from_reduced_general needs l(lambda) <= l1*l2");
    Partition mu_bar = dagger(t.mu, 1).partition();
    Partition nu_bar = dagger(t.nu, 1).partition();
    long long acc = 0;
    for (long long i = 1; i <= l1 * l2 - 1; ++i) {
        DaggerResult d = dagger(t.lambda, i);
        long long term = d.is_partition
                             ? rkron_stabilized({d.partition(), mu_bar, nu_bar}, oracle)
                             : 0;
        acc += (i % 2 == 1) ? term : -term;
    }
    return acc;
}

// Murnaghan-Littlewood: when |lambda| = |mu| + |nu| the reduced Kronecker
// coefficient equals the Littlewood-Richardson coefficient c_{mu,nu}^lambda.
inline long long murnaghan_littlewood_lr(const Partition& lambda, const Partition& mu,
                                         const Partition& nu, KronOracle& oracle) {
    if (lambda.weight() != mu.weight() + nu.weight())
        throw WeightMismatch("murnaghan_littlewood_lr needs |lambda| = |mu| + |nu|");
    return rkron_stabilized({lambda, mu, nu}, oracle);
}

} // namespace kron
