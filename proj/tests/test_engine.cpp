#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/engine.hpp"
#include "kron/stretch.hpp"

using namespace kron;

namespace {

KronTriple triple(const char* l, const char* m, const char* n) {
    return {Partition::parse(l), Partition::parse(m), Partition::parse(n)};
}

} // namespace

TEST_CASE("auto dispatch picks the lattice route when shapes fit") {
    KronOracle oracle;
    KronResult r = compute_kron(triple("6,4,2", "6,6", "7,5"), Method::Auto, oracle);
    CHECK(r.value == 0);
    CHECK(r.method == Method::Rosas);
    CHECK_FALSE(r.determinant_reduction);

    KronResult red = compute_kron(triple("4,3,2,1", "6,4", "5,5"), Method::Auto, oracle);
    CHECK(red.method == Method::Rosas);
    CHECK(red.determinant_reduction);
    CHECK(red.value == oracle.kron_oracle(triple("4,3,2,1", "6,4", "5,5")));

    // 8 rows against a 4 x 1 arrangement: provably zero by the length bound
    KronTriple t8 = triple("2,2,2,2", "8", "1,1,1,1,1,1,1,1");
    CHECK_FALSE(length_bound_check({t8.nu, t8.lambda, t8.mu}));
    KronResult zero = compute_kron(t8, Method::Auto, oracle);
    CHECK(zero.method == Method::Oracle);
    CHECK(zero.value == 0);
}

TEST_CASE("dispatch rotates the long index into the upper position") {
    KronOracle oracle;
    // same coefficient with the three-row index in each slot
    for (auto t : {triple("6,6", "6,4,2", "7,5"), triple("7,5", "6,6", "6,4,2"),
                   triple("6,4,2", "7,5", "6,6")}) {
        KronResult r = compute_kron(t, Method::Auto, oracle);
        CHECK(r.method == Method::Rosas);
        CHECK(r.value == 0);
    }
    KronResult two = compute_kron(triple("12,12", "12,8,4", "14,10"), Method::Auto, oracle);
    CHECK(two.method == Method::Rosas);
    CHECK(two.value == 2);
    // four-row index rotated, then reduced
    KronResult four = compute_kron(triple("6,4", "4,3,2,1", "5,5"), Method::Auto, oracle);
    CHECK(four.method == Method::Rosas);
    CHECK(four.determinant_reduction);
    CHECK(four.value == oracle.kron_oracle(triple("4,3,2,1", "6,4", "5,5")));
}

TEST_CASE("rotated dispatch agrees with the oracle on full sweeps") {
    KronOracle oracle;
    for (int n = 2; n <= 7; ++n) {
        auto shapes = partitions_of(n);
        for (const auto& a : shapes)
            for (const auto& b : shapes)
                for (const auto& c : shapes) {
                    KronTriple t{a, b, c};
                    if (!rotate_to_two_row(t, 4)) continue;
                    CHECK(compute_kron(t, Method::Auto, oracle).value ==
                          oracle.kron_oracle(t));
                }
    }
}

TEST_CASE("forced methods") {
    KronOracle oracle;
    KronTriple t = triple("2,2", "2,2", "2,2");
    CHECK(compute_kron(t, Method::Rosas, oracle).value == 1);
    CHECK(compute_kron(t, Method::Reduced, oracle).value == 1);
    CHECK(compute_kron(t, Method::Oracle, oracle).value == 1);
    KronTriple fat = triple("2,2,2,2,1", "3,3,3", "3,3,3");
    CHECK_THROWS_AS(compute_kron(fat, Method::Rosas, oracle), ShapeError);
    CHECK_THROWS_AS(compute_kron(fat, Method::Reduced, oracle), ShapeError);
    CHECK(compute_kron(fat, Method::Oracle, oracle).value >= 0);
    CHECK(parse_method("rosas") == Method::Rosas);
    CHECK_THROWS_AS(parse_method("fancy"), ParseError);
}

TEST_CASE("stretch sampling follows the same rotation") {
    auto s = sample_stretch(triple("6,6", "6,4,2", "7,5"), 6);
    CHECK(s.method == Method::Rosas);
    std::vector<long long> got;
    for (auto [N, g] : s.values) got.push_back(g);
    CHECK(got == std::vector<long long>{0, 2, 1, 3, 2, 4});
}
