#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the library's own counting or transform code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cubical/cubical_complex.hpp"
#include "cubical/simplicial_complex.hpp"

namespace oracle {

using Int = std::int64_t;

/// Visit every face of the box [0,a_1] x ... x [0,a_d] as per-coordinate
/// choices: start[t] and whether coordinate t is an interval.
inline void for_each_box_face(const std::vector<int>& sides,
                              const std::function<void(const std::vector<int>&, unsigned)>& fn)
{
    const std::size_t d = sides.size();
    std::vector<int> start(d, 0);
    for (unsigned free = 0; free < (1u << d); ++free) {
        std::function<void(std::size_t)> rec = [&](std::size_t t) {
            if (t == d) {
                fn(start, free);
                return;
            }
            const int top = (free >> t & 1u) ? sides[t] - 1 : sides[t];
            for (int x = 0; x <= top; ++x) {
                start[t] = x;
                rec(t + 1);
            }
        };
        rec(0);
    }
}

/// f_0..f_d of the pile of cubes with the given sides.
inline std::vector<Int> pile_f(const std::vector<int>& sides)
{
    std::vector<Int> f(sides.size() + 1, 0);
    for_each_box_face(sides, [&](const std::vector<int>&, unsigned free) { ++f[std::popcount(free)]; });
    return f;
}

/// f_0..f_{d-1} of the boundary of the pile: faces with a fixed coordinate on the box's surface.
inline std::vector<Int> pile_boundary_f(const std::vector<int>& sides)
{
    std::vector<Int> f(sides.size(), 0);
    for_each_box_face(sides, [&](const std::vector<int>& start, unsigned free) {
        for (std::size_t t = 0; t < sides.size(); ++t) {
            if (!(free >> t & 1u) && (start[t] == 0 || start[t] == sides[t])) {
                ++f[std::popcount(free)];
                return;
            }
        }
    });
    return f;
}

/// f_0..f_d of the cubical torus: faces of the box modulo the identification x ~ x + n.
inline std::vector<Int> torus_f(const std::vector<int>& sides)
{
    std::vector<Int> f(sides.size() + 1, 0);
    for_each_box_face(sides, [&](const std::vector<int>& start, unsigned free) {
        for (std::size_t t = 0; t < sides.size(); ++t) {
            if (start[t] == sides[t]) {
                return; // same as the face starting at 0
            }
        }
        ++f[std::popcount(free)];
    });
    return f;
}

/// Brute-force face counts of a cubical complex straight from its maximal cells:
/// all subfaces by vertex set, no validation.
inline std::vector<Int> f_from_cells(const std::vector<cubical::CubicalCell>& cells)
{
    std::set<std::vector<std::size_t>> seen;
    std::vector<Int> f;
    for (const auto& c : cells) {
        const unsigned n = static_cast<unsigned>(c.corners.size());
        // a subface is a pair (low corner, mask) with low & mask == 0
        for (unsigned mask = 0; mask < n; ++mask) {
            for (unsigned low = 0; low < n; ++low) {
                if (low & mask) {
                    continue;
                }
                std::vector<std::size_t> vs;
                for (unsigned b = 0; b < n; ++b) {
                    if ((b & ~mask) == low) {
                        vs.push_back(c.corners[b]);
                    }
                }
                std::sort(vs.begin(), vs.end());
                if (seen.insert(vs).second) {
                    const auto k = static_cast<std::size_t>(std::popcount(mask));
                    f.resize(std::max(f.size(), k + 1), 0);
                    ++f[k];
                }
            }
        }
    }
    return f;
}

/// Polynomials as coefficient vectors, lowest degree first.
using Poly = std::vector<Int>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline Poly poly_pow(const Poly& a, int e)
{
    Poly out{1};
    for (int i = 0; i < e; ++i) {
        out = poly_mul(out, a);
    }
    return out;
}

/// h_0..h_d from Σ_i f_{i-1} λ^i (1-λ)^{d-i}; f_from_minus_one = (f_{-1}, f_0, ...).
inline std::vector<Int> h_simplicial(const std::vector<Int>& f_from_minus_one, int d)
{
    Poly total(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d && i < static_cast<int>(f_from_minus_one.size()); ++i) {
        Poly term = poly_mul(poly_pow({0, 1}, i), poly_pow({1, -1}, d - i));
        for (std::size_t j = 0; j < term.size(); ++j) {
            total[j] += f_from_minus_one[static_cast<std::size_t>(i)] * term[j];
        }
    }
    return total;
}

/// h^sc_0..h^sc_d from Σ_i f_i (2λ)^i (1-λ)^{d-i}; f = (f_0, ..., f_d).
inline std::vector<Int> h_short_cubical(const std::vector<Int>& f, int d)
{
    Poly total(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d && i < static_cast<int>(f.size()); ++i) {
        Poly term = poly_mul(poly_pow({0, 2}, i), poly_pow({1, -1}, d - i));
        for (std::size_t j = 0; j < term.size(); ++j) {
            total[j] += f[static_cast<std::size_t>(i)] * term[j];
        }
    }
    return total;
}

/// Degree-`deg` monomials in `vars` variables as exponent vectors.
inline std::vector<std::vector<int>> monomials(int vars, int deg)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int t, int left) {
        if (t == vars - 1) {
            e[static_cast<std::size_t>(t)] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[static_cast<std::size_t>(t)] = x;
            rec(t + 1, left - x);
        }
    };
    rec(0, deg);
    return out;
}

/// Reverse lexicographic order with x_1 > x_2 > ...: a comes first iff at the
/// last variable where they differ a has the smaller exponent.
inline bool revlex_before(const std::vector<int>& a, const std::vector<int>& b)
{
    for (std::size_t t = a.size(); t-- > 0;) {
        if (a[t] != b[t]) {
            return a[t] < b[t];
        }
    }
    return false;
}

/**
 * ℓ^{<i>} as a monomial count: take the first ℓ degree-i monomials in revlex
 * order and count the degree-(i+1) monomials all of whose degree-i divisors
 * lie among them.
 */
inline Int pseudopower_by_monomials(Int ell, int i)
{
    if (ell == 0) {
        return 0;
    }
    // enough variables that the first ℓ monomials never use the last one
    int vars = 1;
    while (static_cast<Int>(monomials(vars, i).size()) < ell) {
        ++vars;
    }
    ++vars;
    auto deg_i = monomials(vars, i);
    std::sort(deg_i.begin(), deg_i.end(), revlex_before);
    const std::set<std::vector<int>> chosen(deg_i.begin(), deg_i.begin() + ell);
    Int count = 0;
    for (auto m : monomials(vars, i + 1)) {
        bool all_in = true;
        for (std::size_t t = 0; t < m.size() && all_in; ++t) {
            if (m[t] > 0) {
                --m[t];
                all_in = chosen.count(m) > 0;
                ++m[t];
            }
        }
        count += all_in;
    }
    return count;
}

/**
 * Cubical subdivision of a simplicial complex: one vertex per nonempty face,
 * one cube [σ, τ] per pair σ ⊆ τ with σ a vertex and τ a facet. Corner b of
 * [σ, τ] is σ together with the elements of τ \ σ selected by the bits of b.
 * The link of an original vertex v is isomorphic to its link in the input.
 */
struct Subdivision
{
    std::vector<cubical::CubicalCell> cells;
    std::map<std::vector<std::size_t>, std::size_t> vertex_of; // face -> new vertex id
};

inline Subdivision cubical_subdivision(const std::vector<std::vector<std::size_t>>& facets)
{
    Subdivision out;
    auto id = [&](std::vector<std::size_t> s) {
        std::sort(s.begin(), s.end());
        return out.vertex_of.try_emplace(s, out.vertex_of.size()).first->second;
    };
    for (const auto& tau : facets) {
        for (std::size_t v : tau) {
            std::vector<std::size_t> rest;
            for (std::size_t u : tau) {
                if (u != v) {
                    rest.push_back(u);
                }
            }
            const unsigned n = 1u << rest.size();
            std::vector<std::size_t> corners(n);
            for (unsigned b = 0; b < n; ++b) {
                std::vector<std::size_t> face{v};
                for (std::size_t t = 0; t < rest.size(); ++t) {
                    if (b >> t & 1u) {
                        face.push_back(rest[t]);
                    }
                }
                corners[b] = id(face);
            }
            out.cells.emplace_back(static_cast<int>(rest.size()), std::move(corners));
        }
    }
    return out;
}

/// Facets of the join of two vertex-disjoint complexes.
inline std::vector<std::vector<std::size_t>> join(const std::vector<std::vector<std::size_t>>& a,
                                                  const std::vector<std::vector<std::size_t>>& b)
{
    std::vector<std::vector<std::size_t>> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            auto s = x;
            s.insert(s.end(), y.begin(), y.end());
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// Facets of the n-cycle on vertices first, ..., first + n - 1.
inline std::vector<std::vector<std::size_t>> cycle(std::size_t n, std::size_t first)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({first + i, first + (i + 1) % n});
    }
    return out;
}

} // namespace oracle
