#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

inline long long checked_add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit addition overflow");
    return r;
}

inline long long checked_mul_ll(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("64-bit multiplication overflow");
    return r;
}

// Integer partition: a nonincreasing sequence of positive integers.
// Stored without trailing zeros; operations that need a zero-padded view
// take an explicit index or length. part(i) is 1-based and returns 0 past
// the end, so lambda_1 = p.part(1) reads like the math.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw ShapeError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw ShapeError("partition parts must be nonincreasing");
        }
    }

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    const std::vector<long long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    long long length() const { return static_cast<long long>(parts_.size()); }

    long long weight() const {
        long long s = 0;
        for (long long p : parts_) s = checked_add_ll(s, p);
        return s;
    }

    // lambda_i with the zero-padded convention; i >= 1.
    long long part(long long i) const {
        if (i < 1) throw ParameterError("partition index is 1-based");
        return i <= length() ? parts_[std::size_t(i - 1)] : 0;
    }

    Partition stretched(long long n) const {
        if (n < 1) throw ParameterError("stretch factor must be >= 1");
        std::vector<long long> out(parts_);
        for (auto& p : out) p = checked_mul_ll(p, n);
        return Partition(std::move(out));
    }

    Partition plus(const Partition& o) const {
        std::vector<long long> out(std::max(parts_.size(), o.parts_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = checked_add_ll(part(static_cast<long long>(i) + 1),
                                    o.part(static_cast<long long>(i) + 1));
        return Partition(std::move(out));
    }

    // Canonical text form "6,4,2"; the empty partition prints as "0".
    std::string str() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    // Accepts "6,4,2", "0" and "" for the empty partition; trailing zeros
    // in the input are allowed and stripped.
    static Partition parse(const std::string& text) {
        if (text.empty() || text == "0") return Partition();
        std::vector<long long> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
            if (tok.empty()) throw ParseError("empty part in partition: '" + text + "'");
            long long v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw ParseError("bad character in partition: '" + text + "'");
                if (v > (INT64_MAX - 9) / 10)
                    throw ParseError("partition part too large: '" + text + "'");
                v = v * 10 + (c - '0');
            }
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        try {
            return Partition(std::move(parts));
        } catch (const ShapeError& e) {
            throw ParseError(std::string(e.what()) + ": '" + text + "'");
        }
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<long long> parts_;
};

// Index of a Kronecker coefficient g_{mu,nu}^lambda. Weight equality is
// checked by the operations so that the diagnostic can name the offending
// pair.
struct KronTriple {
    Partition lambda;
    Partition mu;
    Partition nu;

    KronTriple stretched(long long n) const {
        return {lambda.stretched(n), mu.stretched(n), nu.stretched(n)};
    }

    friend bool operator==(const KronTriple& a, const KronTriple& b) {
        return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
    }
    friend bool operator<(const KronTriple& a, const KronTriple& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.nu < b.nu;
    }
};

inline void require_equal_weights(const KronTriple& t) {
    long long wl = t.lambda.weight(), wm = t.mu.weight(), wn = t.nu.weight();
    if (wl != wm)
        throw WeightMismatch("lambda and mu have different weights (" +
                             std::to_string(wl) + " vs " + std::to_string(wm) + ")");
    if (wl != wn)
        throw WeightMismatch("lambda and nu have different weights (" +
                             std::to_string(wl) + " vs " + std::to_string(wn) + ")");
}

// Calls fn(parts) for every partition of n with at most max_len parts and
// every part <= max_part, in lexicographically decreasing order.
inline void for_each_partition(long long n, long long max_len, long long max_part,
                               const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> cur;
    std::function<void(long long, long long)> rec = [&](long long rem, long long cap) {
        if (rem == 0) {
            fn(cur);
            return;
        }
        if (static_cast<long long>(cur.size()) == max_len) return;
        long long slots = max_len - static_cast<long long>(cur.size());
        for (long long p = std::min(cap, rem); p >= 1; --p) {
            if (p * slots < rem) break; // cannot reach rem with parts <= p
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) {
        fn(cur);
        return;
    }
    rec(n, std::min(max_part, n));
}

inline std::vector<Partition> partitions_of(long long n, long long max_len = -1) {
    if (max_len < 0) max_len = n;
    std::vector<Partition> out;
    for_each_partition(n, std::max<long long>(max_len, 0), n,
                       [&](const std::vector<long long>& p) { out.emplace_back(p); });
    return out;
}

} // namespace kron
