#pragma once

#include <string>

#include "kron/oracle.hpp"
#include "kron/reduced.hpp"
#include "kron/two_row.hpp"

namespace kron {

enum class Method { Auto, Rosas, Reduced, Oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Rosas: return "rosas";
        case Method::Reduced: return "reduced";
        case Method::Oracle: return "oracle";
        default: return "auto";
    }
}

inline Method parse_method(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "rosas") return Method::Rosas;
    if (s == "reduced") return Method::Reduced;
    if (s == "oracle") return Method::Oracle;
    throw ParseError("unknown method '" + s + "' (expected rosas, reduced or oracle)");
}

struct KronResult {
    long long value = 0;
    Method method = Method::Auto;
    bool determinant_reduction = false;
};

inline bool fits_two_two_row(const KronTriple& t) {
    return t.mu.length() <= 2 && t.nu.length() <= 2 && t.lambda.length() <= 3;
}

// The coefficient is invariant under permuting all three indices, so a
// triple may fit the two-row machinery after rotating the index with more
// than two rows into the upper position. max_upper is 3 for the direct
// formula and 4 for the determinant reduction in front of it.
inline std::optional<KronTriple> rotate_to_two_row(const KronTriple& t,
                                                   long long max_upper) {
    const Partition* ps[3] = {&t.lambda, &t.mu, &t.nu};
    for (int upper = 0; upper < 3; ++upper) {
        const Partition& l = *ps[upper];
        const Partition& a = *ps[(upper + 1) % 3];
        const Partition& b = *ps[(upper + 2) % 3];
        if (l.length() <= max_upper && a.length() <= 2 && b.length() <= 2)
            return KronTriple{l, a, b};
    }
    return std::nullopt;
}

// Method selection: the lattice-point formula when the shapes (after
// rotation) fit, the determinant-twist reduction first when the upper index
// has four rows, the character oracle otherwise.
inline KronResult compute_kron(const KronTriple& t, Method method, KronOracle& oracle) {
    require_equal_weights(t);
    if (method == Method::Auto)
        method = rotate_to_two_row(t, 4) ? Method::Rosas : Method::Oracle;
    KronResult r;
    r.method = method;
    switch (method) {
        case Method::Rosas:
        case Method::Reduced: {
            auto rotated = rotate_to_two_row(t, 4);
            if (!rotated)
                throw ShapeError(
                    "no arrangement of the indices fits two rows / two rows / four rows");
            KronTriple cur = *rotated;
            if (cur.lambda.length() > 3) {
                auto reduced = reduce_by_determinants(cur, 2, 2);
                r.determinant_reduction = true;
                if (!reduced) {
                    r.value = 0;
                    return r;
                }
                cur = *reduced;
            }
            r.value = method == Method::Rosas ? kron_two_row(cur)
                                              : kron_from_reduced_2x2(cur);
            return r;
        }
        case Method::Oracle:
            r.value = oracle.kron_oracle(t);
            return r;
        default:
            throw ParameterError("unresolved method");
    }
}

} // namespace kron
