#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "kron/engine.hpp"

namespace kron {

// One row of the equivalence sweep: the same coefficient by the
// lattice-point formula, the reduced-coefficient recovery and the
// character oracle.
struct TripleCheck {
    KronTriple triple;
    long long rosas = 0;
    long long reduced = 0;
    long long oracle = 0;

    bool ok() const { return rosas == reduced && reduced == oracle; }
};

struct SelftestResult {
    long long triples_checked = 0;
    std::vector<TripleCheck> mismatches; // canonical order

    bool pass() const { return mismatches.empty(); }
};

inline std::vector<KronTriple> two_two_row_triples_of_weight(long long n) {
    std::vector<KronTriple> out;
    std::vector<Partition> lambdas = partitions_of(n, 3);
    std::vector<Partition> two_rows = partitions_of(n, 2);
    for (const auto& l : lambdas)
        for (const auto& m : two_rows)
            for (const auto& v : two_rows) out.push_back({l, m, v});
    return out;
}

// Full oracle-equivalence sweep over every valid two-two-row triple of
// weight <= max_weight. The rosas_override hook exists for tests that need
// to demonstrate mismatch reporting against a corrupted route.
inline SelftestResult
selftest_sweep(long long max_weight, unsigned threads = 0,
               const std::function<long long(const KronTriple&)>& rosas_override = {}) {
    std::vector<KronTriple> all;
    for (long long n = 1; n <= max_weight; ++n) {
        auto batch = two_two_row_triples_of_weight(n);
        all.insert(all.end(), batch.begin(), batch.end());
    }
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;

    SelftestResult result;
    result.triples_checked = static_cast<long long>(all.size());
    std::mutex m;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        KronOracle oracle(int(std::max<long long>(max_weight, 14)));
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= all.size()) return;
            const KronTriple& t = all[i];
            TripleCheck c;
            c.triple = t;
            c.rosas = rosas_override ? rosas_override(t) : kron_two_row(t);
            c.reduced = kron_from_reduced_2x2(t);
            c.oracle = oracle.kron_oracle(t);
            if (!c.ok()) {
                std::lock_guard<std::mutex> lock(m);
                result.mismatches.push_back(std::move(c));
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::sort(result.mismatches.begin(), result.mismatches.end(),
              [](const TripleCheck& a, const TripleCheck& b) { return a.triple < b.triple; });
    return result;
}

} // namespace kron
