// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is exact (integer or rational equality); there are no
// tolerances anywhere.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kron/hunt.hpp"
#include "kron/reduced.hpp"
#include "kron/selftest.hpp"
#include "kron/stretch.hpp"

using namespace kron;

namespace {

struct Failure {
    std::string detail;
};

using CriterionFn = std::function<bool(std::string&)>;

QuasiPolynomial cex_qp() {
    return QuasiPolynomial(2, {Polynomial({Rational(-1, 2), Rational(1, 2)}),
                               Polynomial({Rational(1), Rational(1, 2)})});
}

QuasiPolynomial ph2_qp() {
    return QuasiPolynomial(
        2, {Polynomial({Rational(-1, 4), Rational(3, 2), Rational(7, 4)}),
            Polynomial({Rational(1), Rational(3, 2), Rational(7, 4)})});
}

std::set<KronTriple> family_in_box(long long max_lambda1) {
    std::set<KronTriple> out;
    for (long long i = 2; 2 * i <= max_lambda1; ++i)
        for (long long j = 1; j < i; ++j)
            for (long long k = 2 * i + j + 1; 2 * (k - i - j) <= max_lambda1; ++k) {
                KronTriple t = counterexample_family_triple(i, j, k);
                out.insert({t.lambda, t.nu, t.mu});
                out.insert(std::move(t));
            }
    return out;
}

std::string triple_str(const KronTriple& t) {
    return t.lambda.str() + " | " + t.mu.str() + " | " + t.nu.str();
}

// 1. Stretching values of four family members match the displayed
//    quasipolynomial exactly for N = 1..6.
bool criterion_family_values(std::string& detail) {
    for (auto [i, j, k] : std::vector<std::array<long long, 3>>{
             {2, 1, 6}, {2, 1, 7}, {3, 1, 8}, {3, 2, 9}}) {
        if (!verify_counterexample_family(i, j, k, 6)) {
            detail = "family member (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ") deviates from N/2 + {1, -1/2}";
            return false;
        }
    }
    return true;
}

// 2. The smallest counter-example: exact fitted branches, failed
//    saturation, both indices equal to 1.
bool criterion_smallest_cex(std::string& detail) {
    KronTriple t{Partition({6, 4, 2}), Partition({6, 6}), Partition({7, 5})};
    AnalyzeOptions opt;
    HypothesisReport rep = analyze_triple(t, opt);
    if (!(rep.quasipolynomial == cex_qp())) {
        detail = "fitted quasipolynomial differs from N/2 + {1, -1/2}";
        return false;
    }
    if (rep.strong_sh_holds) {
        detail = "strong SH unexpectedly holds";
        return false;
    }
    if (rep.saturation_idx != 1 || rep.positivity_idx != 1) {
        detail = "indices (s, p) != (1, 1)";
        return false;
    }
    return true;
}

// 3. The positivity counter-example that still saturates.
bool criterion_ph2_cex(std::string& detail) {
    KronTriple t{Partition({10, 6, 2}), Partition({10, 8}), Partition({11, 7})};
    AnalyzeOptions opt;
    HypothesisReport rep = analyze_triple(t, opt);
    if (!(rep.quasipolynomial == ph2_qp())) {
        detail = "fitted quasipolynomial differs from 7/4 N^2 + 3/2 N + {1, -1/4}";
        return false;
    }
    if (!rep.strong_sh_holds || rep.strong_ph2_holds) {
        detail = "expected strong SH to hold and strong PH2 to fail";
        return false;
    }
    return true;
}

// 4. Alternating family.
bool criterion_alternating(std::string& detail) {
    KronTriple t{Partition({1, 1}), Partition({1, 1}), Partition({1, 1})};
    for (long long N = 1; N <= 10; ++N) {
        long long got = kron_two_row(t.stretched(N));
        if (got != (N % 2 == 0 ? 1 : 0)) {
            detail = "value at N = " + std::to_string(N) + " is " + std::to_string(got);
            return false;
        }
    }
    return true;
}

// 5. Three-route equivalence on every valid two-two-row triple of
//    weight <= 11.
bool criterion_equivalence(std::string& detail) {
    SelftestResult res = selftest_sweep(11);
    if (!res.pass()) {
        detail = std::to_string(res.mismatches.size()) + " mismatches, first at " +
                 triple_str(res.mismatches.front().triple);
        return false;
    }
    if (res.triples_checked < 1500) {
        detail = "sweep unexpectedly small: " + std::to_string(res.triples_checked);
        return false;
    }
    detail = std::to_string(res.triples_checked) + " triples";
    return true;
}

// 6. Lattice-point system against the stabilized limit for all
//    (mu2, nu2, lambda2, lambda3) with entries <= 4; rkron_stabilized
//    re-evaluates at n0 + 1 internally, which is the stabilization check.
bool criterion_one_row_vs_stable(std::string& detail) {
    KronOracle oracle(34);
    long long checked = 0;
    for (long long mu2 = 0; mu2 <= 4; ++mu2)
        for (long long nu2 = 0; nu2 <= 4; ++nu2)
            for (long long l2 = 0; l2 <= 4; ++l2)
                for (long long l3 = 0; l3 <= l2; ++l3) {
                    ReducedIndex idx{Partition({l2, l3}),
                                     mu2 ? Partition({mu2}) : Partition(),
                                     nu2 ? Partition({nu2}) : Partition()};
                    long long stable = rkron_stabilized(idx, oracle);
                    long long polytope = rkron_one_row(mu2, nu2, l2, l3);
                    if (stable != polytope) {
                        detail = "disagreement at (" + std::to_string(mu2) + "," +
                                 std::to_string(nu2) + "," + std::to_string(l2) + "," +
                                 std::to_string(l3) + "): " + std::to_string(polytope) +
                                 " vs " + std::to_string(stable);
                        return false;
                    }
                    ++checked;
                }
    detail = std::to_string(checked) + " index tuples";
    return true;
}

// 7. Murnaghan-Littlewood: LR tableaux count equals the stabilized reduced
//    coefficient whenever |lambda| = |mu| + |nu| <= 8.
bool criterion_murnaghan_littlewood(std::string& detail) {
    KronOracle oracle(34);
    long long checked = 0;
    for (int w = 1; w <= 8; ++w)
        for (const auto& l : partitions_of(w))
            for (int a = 0; a <= w; ++a)
                for (const auto& m : partitions_of(a))
                    for (const auto& v : partitions_of(w - a)) {
                        long long lr = oracle.lr_coeff(l, m, v);
                        long long red = rkron_stabilized({l, m, v}, oracle);
                        if (lr != red) {
                            detail = "c != gbar at " + l.str() + " / " + m.str() +
                                     " / " + v.str() + ": " + std::to_string(lr) +
                                     " vs " + std::to_string(red);
                            return false;
                        }
                        ++checked;
                    }
    detail = std::to_string(checked) + " triples";
    return true;
}

// 8. Classification: the saturation hits in a box are exactly the family
//    members it contains (with swaps), the smallest one among them; all
//    hits up to lambda1 = 16 carry the family pattern.
bool criterion_classification(std::string& detail) {
    auto hits12 = hunt_strong_sh({12}, 4, 100);
    std::set<KronTriple> got;
    for (const auto& h : hits12) got.insert(h.triple);
    std::set<KronTriple> expected = family_in_box(12);
    if (got != expected) {
        detail = "hit set in lambda1 <= 12 differs from the family slice (" +
                 std::to_string(got.size()) + " vs " + std::to_string(expected.size()) +
                 ")";
        return false;
    }
    KronTriple smallest{Partition({6, 4, 2}), Partition({6, 6}), Partition({7, 5})};
    KronTriple swapped{Partition({6, 4, 2}), Partition({7, 5}), Partition({6, 6})};
    if (!got.count(smallest) || !got.count(swapped)) {
        detail = "smallest counter-example missing";
        return false;
    }

    auto hits16 = hunt_strong_sh({16}, 4, 100);
    for (const auto& h : hits16) {
        auto pattern = [](const KronTriple& s) {
            return s.mu.part(1) == s.mu.part(2) && s.mu.part(2) == s.nu.part(2) + 1 &&
                   s.lambda.part(2) % 2 == 0 && s.lambda.part(3) % 2 == 0;
        };
        if (!pattern(h.triple) && !pattern({h.triple.lambda, h.triple.nu, h.triple.mu})) {
            detail = "hit outside the mu2 = nu2 + 1, mu1 = mu2 pattern: " +
                     triple_str(h.triple);
            return false;
        }
        if (!matches_counterexample_family(h.triple)) {
            detail = "hit outside the family: " + triple_str(h.triple);
            return false;
        }
    }
    detail = std::to_string(hits12.size()) + " hits in lambda1 <= 12, " +
             std::to_string(hits16.size()) + " in lambda1 <= 16";
    return true;
}

// 9. Positivity index <= 1 on the whole lambda1 <= 10 box, nonnegative ray
//    coefficients, and the shifted reconstruction identity (checked at the
//    shifts where the two Delta values make it well-posed).
bool criterion_positivity_bound(std::string& detail) {
    std::mutex m;
    std::string first_failure;
    AnalyzeOptions opt;
    opt.cap = 5;
    for_each_in_box({10}, std::thread::hardware_concurrency(),
                    [&](long long l1, long long l2, long long l3, long long mu2,
                        long long nu2) {
        {
            std::lock_guard<std::mutex> lock(m);
            if (!first_failure.empty()) return;
        }
        KronTriple t = two_two_row_triple(l1, l2, l3, mu2, nu2);
        std::string local;
        StretchSamples s = sample_stretch(t, opt.N_max);
        QuasiPolynomial f = fit_quasipolynomial(s, opt.period, opt.degree);
        auto p = positivity_index(f, opt.cap);
        if (!p || *p > 1) {
            local = "positivity index > 1 at " + triple_str(t);
        } else {
            ShapeDecomposition d = decompose_shape(f);
            if (d.Q < 0 || d.L < 0)
                local = "negative Q or L at " + triple_str(t);
            else if (!verify_shift_identity(f, d, opt.N_max))
                local = "shift identity fails at " + triple_str(t);
        }
        if (!local.empty()) {
            std::lock_guard<std::mutex> lock(m);
            if (first_failure.empty()) first_failure = local;
        }
    });
    if (!first_failure.empty()) {
        detail = first_failure;
        return false;
    }
    return true;
}

// 10. Property suites: reduction soundness, orthogonality, full symmetry,
//     nonnegativity, LR saturation.
bool criterion_properties(std::string& detail) {
    KronOracle oracle;

    // reduction lemma on random l(lambda) = 4 triples vs the oracle
    std::uint64_t state = 12345;
    auto next = [&state] {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    int done = 0;
    while (done < 60) {
        long long l4 = 1 + static_cast<long long>(next() % 2);
        long long l3 = l4 + static_cast<long long>(next() % 2);
        long long l2 = l3 + static_cast<long long>(next() % 2);
        long long l1 = l2 + static_cast<long long>(next() % 3);
        long long n = l1 + l2 + l3 + l4;
        if (n > 11) continue;
        long long mu2 = static_cast<long long>(next() % std::uint64_t(n / 2 + 1));
        long long nu2 = static_cast<long long>(next() % std::uint64_t(n / 2 + 1));
        KronTriple t{Partition({l1, l2, l3, l4}), Partition({n - mu2, mu2}),
                     Partition({n - nu2, nu2})};
        auto r = reduce_by_determinants(t, 2, 2);
        long long direct = oracle.kron_oracle(t);
        long long via = r ? oracle.kron_oracle(*r) : 0;
        if (direct != via) {
            detail = "reduction changes the coefficient at " + triple_str(t);
            return false;
        }
        ++done;
    }

    // character orthogonality for n <= 8
    for (int n = 1; n <= 8; ++n) {
        auto shapes = partitions_of(n);
        for (const auto& l : shapes)
            for (const auto& mshape : shapes) {
                BigInt sum(0);
                for (const auto& c : oracle.classes(n)) {
                    BigInt term = c.size;
                    term.mul_i128(oracle.character_i128(l, c.cycle_type));
                    term.mul_i128(oracle.character_i128(mshape, c.cycle_type));
                    sum += term;
                }
                if (!(sum == (l == mshape ? factorial_big(n) : BigInt(0)))) {
                    detail = "orthogonality fails at " + l.str() + " / " + mshape.str();
                    return false;
                }
            }
    }

    // full S_3 symmetry of the oracle
    for (int n = 2; n <= 6; ++n) {
        auto shapes = partitions_of(n);
        for (const auto& a : shapes)
            for (const auto& b : shapes)
                for (const auto& c : shapes) {
                    long long g = oracle.kron_oracle({a, b, c});
                    if (g != oracle.kron_oracle({a, c, b}) ||
                        g != oracle.kron_oracle({b, a, c}) ||
                        g != oracle.kron_oracle({c, b, a})) {
                        detail = "asymmetric at " + a.str() + "/" + b.str() + "/" + c.str();
                        return false;
                    }
                }
    }

    // nonnegativity of the signed lattice count on full sweeps
    for (long long n = 1; n <= 11; ++n)
        for (const auto& t : two_two_row_triples_of_weight(n))
            if (kron_two_row(t) < 0) {
                detail = "negative count at " + triple_str(t);
                return false;
            }

    // LR saturation sanity for |lambda| <= 6, N <= 4
    for (int w = 1; w <= 6; ++w)
        for (const auto& l : partitions_of(w))
            for (int a = 0; a <= w; ++a)
                for (const auto& mshape : partitions_of(a))
                    for (const auto& v : partitions_of(w - a))
                        if (!oracle.lr_saturation_check(l, mshape, v, 4)) {
                            detail = "LR saturation fails at " + l.str() + " / " +
                                     mshape.str() + " / " + v.str();
                            return false;
                        }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"counter-example family values, N = 1..6", criterion_family_values},
        {"smallest counter-example: branches, SH verdict, indices", criterion_smallest_cex},
        {"PH2 counter-example that fulfills SH", criterion_ph2_cex},
        {"alternating family g = [N even], N = 1..10", criterion_alternating},
        {"three-route equivalence sweep, weight <= 11", criterion_equivalence},
        {"lattice-point system vs stabilized limit, entries <= 4", criterion_one_row_vs_stable},
        {"Murnaghan-Littlewood identity, |lambda| <= 8", criterion_murnaghan_littlewood},
        {"counter-example classification, lambda1 <= 12 and <= 16", criterion_classification},
        {"positivity index <= 1 and shift identity, lambda1 <= 10", criterion_positivity_bound},
        {"property suites (reduction, orthogonality, symmetry, LR)", criterion_properties},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].second(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
                    criteria[i].first.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
