#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kron/hunt.hpp"
#include "kron/reduced.hpp"

using namespace kron;

namespace {

// All family triples with lambda_1 <= box, plus their mu <-> nu swaps.
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

} // namespace

TEST_CASE("counter-example family construction") {
    KronTriple t = counterexample_family_triple(2, 1, 6);
    CHECK(t.lambda == Partition({6, 4, 2}));
    CHECK(t.mu == Partition({6, 6}));
    CHECK(t.nu == Partition({7, 5}));
    require_equal_weights(t);
    CHECK_THROWS_AS(counterexample_family_triple(1, 1, 6), ParameterError);
    CHECK_THROWS_AS(counterexample_family_triple(2, 1, 5), ParameterError);
}

TEST_CASE("counter-example family verification") {
    CHECK(verify_counterexample_family(2, 1, 6, 6));
    CHECK(verify_counterexample_family(2, 1, 7, 6));
    CHECK(verify_counterexample_family(3, 1, 8, 4));
    CHECK(verify_counterexample_family(3, 2, 9, 4));
    // the displayed values for the smallest member: 0, 2, 1, 3, 2, 4
    KronTriple t = counterexample_family_triple(2, 1, 6);
    std::vector<long long> vals;
    for (long long N = 1; N <= 6; ++N) vals.push_back(kron_two_row(t.stretched(N)));
    CHECK(vals == std::vector<long long>{0, 2, 1, 3, 2, 4});
}

TEST_CASE("family membership recognizer") {
    CHECK(matches_counterexample_family(counterexample_family_triple(2, 1, 6)));
    KronTriple t = counterexample_family_triple(2, 1, 6);
    CHECK(matches_counterexample_family({t.lambda, t.nu, t.mu})); // swap
    CHECK_FALSE(matches_counterexample_family(
        {Partition({2, 2}), Partition({2, 2}), Partition({2, 2})}));
    CHECK_FALSE(matches_counterexample_family(
        {Partition({6, 4, 2}), Partition({6, 6}), Partition({6, 6})}));
}

TEST_CASE("saturation hunt finds exactly the family") {
    CHECK(hunt_strong_sh({5}, 4, 100).empty());

    auto hits6 = hunt_strong_sh({6}, 4, 100);
    std::set<KronTriple> got6;
    for (const auto& h : hits6) got6.insert(h.triple);
    CHECK(got6 == family_in_box(6)); // the smallest member and its swap
    CHECK(got6.size() == 2);

    auto hits8 = hunt_strong_sh({8}, 4, 100);
    std::set<KronTriple> got8;
    for (const auto& h : hits8) {
        got8.insert(h.triple);
        CHECK_FALSE(h.report.strong_sh_holds);
        CHECK_FALSE(h.report.strong_ph2_holds); // SH failure implies PH2 failure
        CHECK(matches_counterexample_family(h.triple));
    }
    CHECK(got8 == family_in_box(8));
    // monotone boxes: enlarging never removes hits
    for (const auto& t : got6) CHECK(got8.count(t) == 1);
}

TEST_CASE("hunt detection is route-independent") {
    // same g values whichever formula backs the sweep
    for_each_in_box({6}, 1, [](long long l1, long long l2, long long l3, long long mu2,
                               long long nu2) {
        KronTriple t = two_two_row_triple(l1, l2, l3, mu2, nu2);
        for (long long N = 1; N <= 3; ++N) {
            KronTriple tn = t.stretched(N);
            CHECK(kron_two_row(tn) == kron_from_reduced_2x2(tn));
        }
    });
}

TEST_CASE("positivity hunt") {
    auto hits = hunt_strong_ph2({6}, 8, 100);
    std::set<KronTriple> got;
    for (const auto& h : hits) {
        got.insert(h.triple);
        CHECK_FALSE(h.report.strong_ph2_holds);
        CHECK(ph2_congruence_pattern(h.triple));
        // the failing coefficient is always the odd-N constant
        REQUIRE(h.report.shape.has_value());
        CHECK(h.report.shape->delta_odd.is_negative());
        CHECK(h.report.shape->delta_even == Rational(1));
    }
    // every saturation counter-example is also a positivity counter-example
    for (const auto& h : hunt_strong_sh({6}, 4, 100)) CHECK(got.count(h.triple) == 1);
    // deterministic output regardless of worker count
    auto hits1 = hunt_strong_ph2({6}, 8, 100, 1);
    REQUIRE(hits1.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i)
        CHECK(hits1[i].triple == hits[i].triple);
}

TEST_CASE("positivity hunt reaches the quadratic counter-example") {
    auto hits = hunt_strong_ph2({10}, 8, 100);
    KronTriple quad{Partition({10, 6, 2}), Partition({10, 8}), Partition({11, 7})};
    bool found = false;
    for (const auto& h : hits) {
        if (!(h.triple == quad)) continue;
        found = true;
        CHECK(h.report.strong_sh_holds); // saturates although not positive
        REQUIRE(h.report.shape.has_value());
        CHECK(h.report.shape->Q == 7);
        CHECK(h.report.shape->L == 3);
        CHECK(h.report.shape->delta_odd == Rational(-1, 4));
        CHECK(h.report.saturation_idx == 0);
        CHECK(h.report.positivity_idx == 1);
    }
    CHECK(found);
}

TEST_CASE("congruence pattern helper") {
    CHECK(ph2_congruence_pattern(counterexample_family_triple(2, 1, 6)));
    CHECK(ph2_congruence_pattern(
        {Partition({10, 6, 2}), Partition({10, 8}), Partition({11, 7})}));
    CHECK_FALSE(ph2_congruence_pattern(
        {Partition({3, 2, 1}), Partition({4, 2}), Partition({3, 3})}));
}
