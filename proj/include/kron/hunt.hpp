#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "kron/stretch.hpp"

namespace kron {

// =============================================================================
// Exhaustive counter-example search over the two-two-row family. The
// parameter space is (lambda1, lambda2, lambda3, mu2, nu2) with
// lambda1 >= lambda2 >= lambda3 >= 0 and 0 <= mu2, nu2 <= |lambda|/2;
// mu1 and nu1 are forced by the equal-weight condition.
//
// Saturation hits are detected from exact samples (g = 0 at N = 1 but
// g > 0 at some 2 <= N <= N_max) and then confirmed on a fitted
// quasipolynomial, which weeds out alternating families whose N=1 branch
// vanishes identically. Positivity hits are read off the fitted branch
// coefficients directly.
//
// The expected hit set is the one-parameter-family
//   alpha = (k,k), beta = (k+1,k-1), gamma = (2k-2i-2j, 2i, 2j),
//   i > j > 0, k > 2i + j,
// up to swapping mu and nu; helpers to build and recognize it live here.
// =============================================================================

struct SearchBox {
    long long max_lambda1 = 0;
};

struct HuntHit {
    KronTriple triple;
    HypothesisReport report;
};

inline KronTriple two_two_row_triple(long long l1, long long l2, long long l3,
                                     long long mu2, long long nu2) {
    long long n = l1 + l2 + l3;
    return {Partition({l1, l2, l3}), Partition({n - mu2, mu2}), Partition({n - nu2, nu2})};
}

// Calls fn on every tuple in the box, slicing on lambda1 across threads.
// fn must be safe to call concurrently for distinct tuples.
inline void for_each_in_box(const SearchBox& box, unsigned threads,
                            const std::function<void(long long, long long, long long,
                                                     long long, long long)>& fn) {
    if (box.max_lambda1 < 1) throw ParameterError("search box needs max_lambda1 >= 1");
    if (threads == 0) threads = 1;
    std::atomic<long long> next{1};
    auto worker = [&] {
        for (;;) {
            long long l1 = next.fetch_add(1);
            if (l1 > box.max_lambda1) return;
            for (long long l2 = 0; l2 <= l1; ++l2)
                for (long long l3 = 0; l3 <= l2; ++l3) {
                    long long n = l1 + l2 + l3;
                    for (long long mu2 = 0; 2 * mu2 <= n; ++mu2)
                        for (long long nu2 = 0; 2 * nu2 <= n; ++nu2)
                            fn(l1, l2, l3, mu2, nu2);
                }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

namespace detail {

inline void sort_hits(std::vector<HuntHit>& hits) {
    std::sort(hits.begin(), hits.end(), [](const HuntHit& a, const HuntHit& b) {
        return a.triple < b.triple;
    });
}

inline long long g_at(const KronTriple& t, long long N) {
    return kron_two_row(t.stretched(N));
}

} // namespace detail

inline std::vector<HuntHit> hunt_strong_sh(const SearchBox& box, long long N_max,
                                           long long cap, unsigned threads = 0) {
    if (N_max < 2) throw ParameterError("hunt needs N_max >= 2");
    AnalyzeOptions opt;
    opt.N_max = std::max<long long>(N_max, opt.period * (opt.degree + 2));
    opt.cap = cap;
    std::vector<HuntHit> hits;
    std::mutex m;
    for_each_in_box(box, threads ? threads : std::thread::hardware_concurrency(),
                    [&](long long l1, long long l2, long long l3, long long mu2,
                        long long nu2) {
        KronTriple t = two_two_row_triple(l1, l2, l3, mu2, nu2);
        if (detail::g_at(t, 1) != 0) return;
        bool positive_later = false;
        for (long long N = 2; N <= N_max && !positive_later; ++N)
            positive_later = detail::g_at(t, N) > 0;
        if (!positive_later) return;
        HypothesisReport rep = analyze_triple(t, opt);
        if (check_strong_sh(rep.quasipolynomial)) return; // alternating family etc.
        std::lock_guard<std::mutex> lock(m);
        hits.push_back({std::move(t), std::move(rep)});
    });
    detail::sort_hits(hits);
    return hits;
}

inline std::vector<HuntHit> hunt_strong_ph2(const SearchBox& box, long long N_max,
                                            long long cap, unsigned threads = 0) {
    AnalyzeOptions opt;
    opt.N_max = std::max<long long>(N_max, opt.period * (opt.degree + 2));
    opt.cap = cap;
    std::vector<HuntHit> hits;
    std::mutex m;
    for_each_in_box(box, threads ? threads : std::thread::hardware_concurrency(),
                    [&](long long l1, long long l2, long long l3, long long mu2,
                        long long nu2) {
        KronTriple t = two_two_row_triple(l1, l2, l3, mu2, nu2);
        HypothesisReport rep = analyze_triple(t, opt);
        if (check_strong_ph2(rep.quasipolynomial)) return;
        std::lock_guard<std::mutex> lock(m);
        hits.push_back({std::move(t), std::move(rep)});
    });
    detail::sort_hits(hits);
    return hits;
}

// alpha = (k,k), beta = (k+1,k-1), gamma = (2k-2i-2j, 2i, 2j).
inline KronTriple counterexample_family_triple(long long i, long long j, long long k) {
    if (!(i > j && j > 0 && k > 2 * i + j))
        throw ParameterError("counter-example family needs i > j > 0 and k > 2i + j");
    return {Partition({2 * k - 2 * i - 2 * j, 2 * i, 2 * j}), Partition({k, k}),
            Partition({k + 1, k - 1})};
}

// Checks the whole displayed stretching behaviour of the family:
// g = N/2 + 1 at even N and N/2 - 1/2 at odd N, for N = 1..N_max.
inline bool verify_counterexample_family(long long i, long long j, long long k, long long N_max) {
    KronTriple t = counterexample_family_triple(i, j, k);
    for (long long N = 1; N <= N_max; ++N) {
        long long expected = N % 2 == 0 ? N / 2 + 1 : (N - 1) / 2;
        if (detail::g_at(t, N) != expected) return false;
    }
    return true;
}

// Membership in the family above, up to swapping mu and nu.
inline bool matches_counterexample_family(const KronTriple& t) {
    auto direct = [](const KronTriple& s) {
        if (s.lambda.length() != 3 || s.mu.length() != 2 || s.nu.length() != 2)
            return false;
        long long k = s.mu.part(1);
        if (s.mu.part(2) != k) return false;
        if (s.nu.part(1) != k + 1 || s.nu.part(2) != k - 1) return false;
        if (s.lambda.part(2) % 2 != 0 || s.lambda.part(3) % 2 != 0) return false;
        long long i = s.lambda.part(2) / 2, j = s.lambda.part(3) / 2;
        if (!(i > j && j > 0 && k > 2 * i + j)) return false;
        return s.lambda.part(1) == 2 * (k - i - j);
    };
    return direct(t) || direct({t.lambda, t.nu, t.mu});
}

// Congruence pattern carried by every positivity counter-example:
// lambda1 ≡ lambda2 ≡ lambda3 ≡ mu2 + nu2 + 1 ≡ 0 (mod 2).
inline bool ph2_congruence_pattern(const KronTriple& t) {
    return t.lambda.part(1) % 2 == 0 && t.lambda.part(2) % 2 == 0 &&
           t.lambda.part(3) % 2 == 0 && (t.mu.part(2) + t.nu.part(2)) % 2 == 1;
}

} // namespace kron
