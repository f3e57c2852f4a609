#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kron/bigint.hpp"
#include "kron/partition.hpp"

namespace kron {

// Conjugacy class of S_n: cycle type plus exact class size n!/z_rho,
// where z_rho = prod_i i^{m_i} * m_i! over part multiplicities.
struct ConjugacyClass {
    Partition cycle_type;
    BigInt size;
};

// =============================================================================
// Brute-force ground truth, deliberately independent of the lattice-point
// formulas it is used to check:
//
//   character(lambda, rho)  irreducible character chi^lambda(rho) by the
//                           Murnaghan-Nakayama recursion on beta-sets
//                           (first-column hook lengths): removing a border
//                           strip of size t replaces one beta-number b by
//                           b - t, with sign (-1)^(number of beta-numbers
//                           jumped over).
//
//   kron_oracle(t)          g = (1/n!) * sum_rho |C_rho| * chi^lambda(rho)
//                           * chi^mu(rho) * chi^nu(rho), accumulated in
//                           arbitrary precision and divided out exactly.
//
//   kostka(lambda, mu)      semistandard tableaux of shape lambda and
//                           content mu, counted by depth-first fill over
//                           horizontal strips.
//
//   lr_coeff(lambda,mu,nu)  Littlewood-Richardson skew tableaux of shape
//                           lambda/mu and content nu, counted cell by cell
//                           in reverse reading order with the lattice-word
//                           constraint enforced as a prefix prune.
//
// Characters are memoized on (shape, remaining cycle parts). All values are
// exact; any non-integral or negative end result throws rather than rounds.
// =============================================================================
class KronOracle {
public:
    explicit KronOracle(int max_n = 14) : max_n_(max_n) {
        if (max_n_ < 0 || max_n_ > kHardCap)
            throw ParameterError("oracle weight limit must be in 0.." +
                                 std::to_string(kHardCap));
    }

    int max_n() const { return max_n_; }

    void set_max_n(int n) {
        if (n < 0 || n > kHardCap)
            throw ParameterError("oracle weight limit must be in 0.." +
                                 std::to_string(kHardCap));
        max_n_ = n;
    }

    void clear_cache() {
        char_cache_.clear();
        class_cache_.clear();
    }

    const std::vector<ConjugacyClass>& classes(int n) {
        auto it = class_cache_.find(n);
        if (it != class_cache_.end()) return it->second;
        std::vector<ConjugacyClass> cs;
        for_each_partition(n, n, n, [&](const std::vector<long long>& rho) {
            ConjugacyClass c;
            c.cycle_type = Partition(rho);
            c.size = factorial_big(n);
            long long run = 0, prev = 0;
            for (long long p : rho) {
                c.size.div_exact_u64(std::uint64_t(p));
                if (p == prev) {
                    ++run;
                } else {
                    prev = p;
                    run = 1;
                }
                c.size.div_exact_u64(std::uint64_t(run));
            }
            cs.push_back(std::move(c));
        });
        return class_cache_.emplace(n, std::move(cs)).first->second;
    }

    long long character(const Partition& lambda, const Partition& rho) {
        if (lambda.weight() != rho.weight())
            throw WeightMismatch("character needs |lambda| = |rho|");
        return checked_narrow(character_i128(lambda, rho));
    }

    int128 character_i128(const Partition& lambda, const Partition& rho) {
        if (lambda.weight() > kHardCap || rho.weight() > kHardCap)
            throw OracleOverflow("character weight exceeds the hard limit " +
                                 std::to_string(kHardCap));
        return char_rec(lambda.parts(), rho.parts(), 0);
    }

    long long kron_oracle(const KronTriple& t) {
        require_equal_weights(t);
        long long n = t.lambda.weight();
        check_limit(n);
        BigInt total(0);
        for (const auto& cls : classes(int(n))) {
            int128 cl = character_i128(t.lambda, cls.cycle_type);
            if (cl == 0) continue;
            int128 cm = character_i128(t.mu, cls.cycle_type);
            if (cm == 0) continue;
            int128 cn = character_i128(t.nu, cls.cycle_type);
            if (cn == 0) continue;
            BigInt term = cls.size;
            term.mul_i128(cl);
            term.mul_i128(cm);
            term.mul_i128(cn);
            total += term;
        }
        // total = g * n!; peel the factorial off one exact division at a time
        for (long long j = 2; j <= n; ++j) total.div_exact_u64(std::uint64_t(j));
        long long g = checked_narrow(total.to_i128());
        if (g < 0)
            throw Error("internal: negative Kronecker coefficient from character sum");
        return g;
    }

    // Number of semistandard Young tableaux of shape lambda and content mu.
    long long kostka(const Partition& lambda, const Partition& mu) {
        if (lambda.weight() != mu.weight())
            throw WeightMismatch("kostka needs |lambda| = |mu|");
        return kostka_rec(lambda.parts(), mu.parts(),
                          static_cast<long long>(mu.parts().size()));
    }

    // Number of Littlewood-Richardson tableaux of shape lambda/mu, content nu.
    long long lr_coeff(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
        if (lambda.weight() != mu.weight() + nu.weight())
            throw WeightMismatch("lr_coeff needs |lambda| = |mu| + |nu|");
        for (long long i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > lambda.part(i)) return 0; // mu not contained in lambda
        if (mu.length() > lambda.length()) return 0;
        return lr_count(lambda, mu, nu);
    }

    // Desk-scale demonstration of the Littlewood-Richardson saturation
    // property: positivity of c is equivalent to positivity of every
    // stretched c up to N_max.
    bool lr_saturation_check(const Partition& lambda, const Partition& mu,
                             const Partition& nu, long long N_max) {
        bool base = lr_coeff(lambda, mu, nu) > 0;
        for (long long N = 1; N <= N_max; ++N) {
            bool stretched = lr_coeff(lambda.stretched(N), mu.stretched(N),
                                      nu.stretched(N)) > 0;
            if (stretched != base) return false;
        }
        return true;
    }

private:
    // Above this the int128 bounds used for character values are no longer
    // comfortable (partial sums stay below n * sqrt(n!)); the configurable
    // max_n_ is usually far lower.
    static constexpr int kHardCap = 50;
    // New memo entries stop being inserted past this point; lookups still
    // hit, so results are unaffected.
    static constexpr std::size_t kCacheCap = 8'000'000;

    int max_n_;
    std::unordered_map<std::string, int128> char_cache_;
    std::map<int, std::vector<ConjugacyClass>> class_cache_;

    void check_limit(long long n) const {
        if (n > max_n_)
            throw OracleOverflow("weight " + std::to_string(n) +
                                 " exceeds the oracle limit " + std::to_string(max_n_));
    }

    static std::string cache_key(const std::vector<long long>& shape,
                                 const std::vector<long long>& rho,
                                 std::size_t idx) {
        std::string k;
        k.reserve(shape.size() + (rho.size() - idx) + 1);
        for (long long p : shape) k.push_back(char(p));
        k.push_back(char(0x7f));
        for (std::size_t i = idx; i < rho.size(); ++i) k.push_back(char(rho[i]));
        return k;
    }

    int128 char_rec(const std::vector<long long>& shape,
                    const std::vector<long long>& rho, std::size_t idx) {
        if (idx == rho.size()) return shape.empty() ? 1 : 0;
        if (shape.empty()) return 0;
        std::string key = cache_key(shape, rho, idx);
        auto it = char_cache_.find(key);
        if (it != char_cache_.end()) return it->second;

        long long t = rho[idx];
        std::size_t r = shape.size();
        std::vector<long long> beta(r);
        for (std::size_t i = 0; i < r; ++i)
            beta[i] = shape[i] + static_cast<long long>(r - 1 - i); // strictly decreasing

        int128 total = 0;
        for (std::size_t i = 0; i < r; ++i) {
            long long v = beta[i] - t;
            if (v < 0) continue;
            bool clash = false;
            int jumps = 0;
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i) continue;
                if (beta[j] == v) { clash = true; break; }
                if (beta[j] > v && beta[j] < beta[i]) ++jumps;
            }
            if (clash) continue;
            // rebuild the shape from the modified beta-set
            std::vector<long long> nb = beta;
            nb[i] = v;
            std::sort(nb.begin(), nb.end(), std::greater<long long>());
            std::vector<long long> child(r);
            for (std::size_t j = 0; j < r; ++j)
                child[j] = nb[j] - static_cast<long long>(r - 1 - j);
            while (!child.empty() && child.back() == 0) child.pop_back();
            int128 sub = char_rec(child, rho, idx + 1);
            total = (jumps & 1) ? total - sub : total + sub;
        }
        if (char_cache_.size() < kCacheCap) char_cache_.emplace(std::move(key), total);
        return total;
    }

    // Strip-by-strip SSYT count: peel a horizontal strip of size mu_k off
    // lambda (interlacing rows), recurse on the remaining content.
    long long kostka_rec(const std::vector<long long>& shape,
                         const std::vector<long long>& content, long long k) {
        if (k == 0) return shape.empty() ? 1 : 0;
        long long strip = content[std::size_t(k - 1)];
        long long total = 0;
        std::vector<long long> inner(shape.size(), 0);
        // choose inner with shape_{i+1} <= inner_i <= shape_i, sum difference = strip
        std::function<void(std::size_t, long long)> choose = [&](std::size_t row,
                                                                 long long rem) {
            if (row == shape.size()) {
                if (rem != 0) return;
                std::vector<long long> next(inner);
                while (!next.empty() && next.back() == 0) next.pop_back();
                for (std::size_t i = 1; i < next.size(); ++i)
                    if (next[i] > next[i - 1]) return; // interlacing should prevent this
                total += kostka_rec(next, content, k - 1);
                return;
            }
            long long hi = shape[row];
            long long lo = row + 1 < shape.size() ? shape[row + 1] : 0;
            for (long long v = hi; v >= lo; --v) {
                long long removed = shape[row] - v;
                if (removed > rem) break;
                inner[row] = v;
                choose(row + 1, rem - removed);
            }
        };
        choose(0, strip);
        return total;
    }

    long long lr_count(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
        long long rows = lambda.length();
        long long values = nu.length();
        if (values == 0) return 1; // empty content: the empty filling
        // grid[r][c] holds the value placed at (row r, column c), 0 if none
        std::vector<std::vector<long long>> grid(static_cast<std::size_t>(rows));
        for (long long r = 0; r < rows; ++r)
            grid[std::size_t(r)].assign(std::size_t(lambda.part(r + 1)), 0);
        std::vector<long long> used(std::size_t(values) + 1, 0);
        long long total = 0;

        // cells in reverse reading order: rows top to bottom, right to left
        std::vector<std::pair<long long, long long>> cells;
        for (long long r = 1; r <= rows; ++r)
            for (long long c = lambda.part(r) - 1; c >= mu.part(r); --c)
                cells.emplace_back(r - 1, c);

        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == cells.size()) {
                ++total;
                return;
            }
            auto [r, c] = cells[i];
            long long right = c + 1 < lambda.part(r + 1)
                                  ? grid[std::size_t(r)][std::size_t(c + 1)]
                                  : values; // no right neighbour: no upper bound
            long long above = 0;
            if (r > 0 && c < lambda.part(r) && c >= mu.part(r) &&
                c < static_cast<long long>(grid[std::size_t(r - 1)].size()))
                above = grid[std::size_t(r - 1)][std::size_t(c)];
            for (long long v = 1; v <= right; ++v) {
                if (v <= above) continue;                  // column-strict
                if (used[std::size_t(v)] >= nu.part(v)) continue;
                if (v > 1 && used[std::size_t(v - 1)] <= used[std::size_t(v)])
                    continue;                              // lattice-word prefix
                used[std::size_t(v)]++;
                grid[std::size_t(r)][std::size_t(c)] = v;
                fill(i + 1);
                grid[std::size_t(r)][std::size_t(c)] = 0;
                used[std::size_t(v)]--;
            }
        };
        fill(0);
        return total;
    }
};

} // namespace kron
