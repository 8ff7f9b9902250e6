#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubical/errors.hpp"
#include "cubical/integer.hpp"
#include "cubical/report.hpp"
#include "cubical/vectors.hpp"

namespace cubical {

/// One term C(top, bottom) of a binomial expansion.
struct BinomialTerm
{
    Int top = 0;
    int bottom = 0;

    bool operator==(const BinomialTerm&) const = default;
};

/**
 * The i-th Macaulay representation
 *     value = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_s, s),
 * with n_i > n_{i-1} > ... > n_s >= s >= 1. Terms are stored from t = i down.
 */
struct MacaulayDecomposition
{
    Int value = 0;
    int position = 1;
    std::vector<BinomialTerm> terms;

    Int sum() const
    {
        Int total = 0;
        for (const auto& t : terms) {
            total = checked::add(total, binomial(t.top, t.bottom));
        }
        return total;
    }
};

namespace detail {

/// min(C(n, k), cap + 1), without overflow for large n.
inline Int binomial_capped(Int n, int k, Int cap)
{
    if (k < 0 || k > n) {
        return 0;
    }
    __int128 r = 1;
    for (int j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
        if (r > cap) {
            return cap + 1;
        }
    }
    return static_cast<Int>(r);
}

} // namespace detail

/// Greedy decomposition: n_t is the largest n with C(n, t) not exceeding what is left.
/// ℓ = 0 gives the empty chain.
inline MacaulayDecomposition macaulay_rep(Int value, int position)
{
    if (value < 0) {
        throw InvalidArgument("macaulay_rep of a negative integer");
    }
    if (position < 1) {
        throw InvalidArgument("macaulay_rep needs position >= 1");
    }
    MacaulayDecomposition rep{value, position, {}};
    Int rest = value;
    for (int t = position; t >= 1 && rest > 0; --t) {
        // C(t, t) = 1 <= rest, and C(t + rest, t) > rest, so n lies in [t, t + rest).
        Int lo = t;
        Int hi = t + rest;
        while (hi - lo > 1) {
            const Int mid = lo + (hi - lo) / 2;
            if (detail::binomial_capped(mid, t, rest) <= rest) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rep.terms.push_back({lo, t});
        rest -= binomial(lo, t);
    }
    return rep;
}

/// ℓ^{<i>} = C(n_i + 1, i + 1) + C(n_{i-1} + 1, i) + ... + C(n_s + 1, s + 1); 0^{<i>} = 0.
inline Int pseudopower(Int value, int position)
{
    Int total = 0;
    for (const auto& t : macaulay_rep(value, position).terms) {
        total = checked::add(total, binomial(t.top + 1, t.bottom + 1));
    }
    return total;
}

struct MVectorCheck
{
    bool ok = true;
    /// Index of the first entry that breaks a condition.
    std::optional<std::size_t> violation;
    std::string reason;
};

/// (g_0, g_1, ...) is an M-vector: g_0 = 1, g_i >= 0, and g_{i+1} <= g_i^{<i>} for i >= 1.
inline MVectorCheck is_m_vector(std::span<const Int> g)
{
    if (g.empty()) {
        return {false, 0, "empty sequence"};
    }
    if (g[0] != 1) {
        return {false, 0, "g_0 = " + std::to_string(g[0]) + " != 1"};
    }
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] < 0) {
            return {false, i, "g_" + std::to_string(i) + " < 0"};
        }
        if (i >= 2) {
            const Int bound = pseudopower(g[i - 1], static_cast<int>(i - 1));
            if (g[i] > bound) {
                return {false, i,
                        "g_" + std::to_string(i) + " = " + std::to_string(g[i]) + " exceeds g_" +
                            std::to_string(i - 1) + "^<" + std::to_string(i - 1) + "> = " + std::to_string(bound)};
            }
        }
    }
    return {};
}

/**
 * Necessary numeric conditions for h to be the h-vector of a simplicial
 * d-polytope: h_0 = 1, h_i = h_{d-i}, and (1, g_1, ..., g_{⌊d/2⌋}) is an M-vector.
 */
inline VerificationReport check_g_theorem_conditions(const SimplicialHVector& h)
{
    VerificationReport report;
    report.check = "g-theorem-conditions";
    report.statement = "h_0 = 1; h_i = h_{d-i}; (1, g_1, ..., g_{d/2}) is an M-vector";
    const int d = h.d();
    report.add("h_0 = 1", 0, h[0], 1);
    for (int i = 0; i <= d; ++i) {
        report.add("h_i = h_{d-i}", i, h[i], h[d - i]);
    }
    std::vector<Int> g{1};
    for (int i = 1; i <= d / 2; ++i) {
        g.push_back(checked::sub(h[i], h[i - 1]));
    }
    for (std::size_t i = 1; i < g.size(); ++i) {
        report.add("g_i >= 0", static_cast<int>(i), g[i], 0, Relation::at_least);
        if (i >= 2) {
            const Int bound = pseudopower(g[i - 1], static_cast<int>(i - 1));
            report.add("g_{i-1}^<i-1> >= g_i", static_cast<int>(i), bound, g[i], Relation::at_least);
        }
    }
    report.note("necessary conditions only; sufficiency needs a polytope construction");
    return report.finish();
}

} // namespace cubical
