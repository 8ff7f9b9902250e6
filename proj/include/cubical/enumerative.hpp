#pragma once

#include <optional>
#include <vector>

#include "cubical/cubical_complex.hpp"
#include "cubical/integer.hpp"
#include "cubical/simplicial_complex.hpp"
#include "cubical/vectors.hpp"

namespace cubical {

inline SimplicialFVector f_vector(const SimplicialComplex& complex)
{
    std::vector<Int> f;
    for (int i = -1; i <= complex.dim(); ++i) {
        f.push_back(complex.count(i));
    }
    return SimplicialFVector(complex.dim(), std::move(f));
}

inline CubicalFVector f_vector(const CubicalComplex& complex)
{
    std::vector<Int> f;
    for (int i = -1; i <= complex.dim(); ++i) {
        f.push_back(complex.count(i));
    }
    return CubicalFVector(complex.dim(), std::move(f));
}

/// Σ_{i=-1}^{dim} (-1)^i f_i.
template <Convention C>
Int reduced_euler(const FVector<C>& f)
{
    Int chi = 0;
    for (int i = -1; i <= f.dim(); ++i) {
        chi = checked::add(chi, checked::sign(i) * f[i]);
    }
    return chi;
}

inline Int reduced_euler(const SimplicialComplex& complex) { return reduced_euler(f_vector(complex)); }
inline Int reduced_euler(const CubicalComplex& complex) { return reduced_euler(f_vector(complex)); }

/// Reduced Euler characteristic of lk(F), summed straight over the cofaces
/// G ⊇ F as (-1)^{dim G - dim F - 1}; G = F plays the empty simplex.
inline Int link_reduced_euler(const CubicalComplex& complex, FaceId f)
{
    const int k = complex.face(f).dim;
    Int chi = 0;
    for (FaceId g : complex.cofaces(f)) {
        chi += checked::sign(complex.face(g).dim - k - 1);
    }
    return chi;
}

/**
 * Simplicial h-vector, Σ_j h_j λ^j = Σ_i f_{i-1} λ^i (1-λ)^{d-i}, expanded as
 * h_j = Σ_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}.
 *
 * d defaults to dim + 1. A larger d treats the complex as sitting in a
 * higher-dimensional ambient (used for vertex links of non-pure complexes).
 */
inline SimplicialHVector h_simplicial(const SimplicialFVector& f, std::optional<int> d_override = std::nullopt)
{
    const int d = d_override.value_or(f.dim() + 1);
    if (d < f.dim() + 1 || d < 0) {
        throw InvalidArgument("h_simplicial: parameter d smaller than dim + 1");
    }
    std::vector<Int> h(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Int term = checked::mul(binomial(d - i, j - i), f[i - 1]);
            acc = checked::add(acc, checked::sign(j - i) * term);
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return SimplicialHVector(d, std::move(h));
}

/**
 * Short cubical h-vector, Σ_j h_j λ^j = Σ_i f_i (2λ)^i (1-λ)^{d-i}, expanded as
 * h_j = Σ_{i<=j} 2^i (-1)^{j-i} C(d-i, j-i) f_i.
 *
 * d defaults to the complex dimension and must be >= 0; passing a larger d
 * reads the f-vector as a complex of that nominal dimension (the empty
 * complex {∅} as a (d)-complex yields the zero vector).
 */
inline ShortCubicalHVector h_short_cubical_from_f(const CubicalFVector& f, std::optional<int> d_override = std::nullopt)
{
    const int d = d_override.value_or(f.dim());
    if (d < 0) {
        throw InvalidArgument("short cubical h-vector is undefined for dimension < 0");
    }
    if (d < f.dim()) {
        throw InvalidArgument("h_short_cubical_from_f: parameter d smaller than dim");
    }
    std::vector<Int> h(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Int term = checked::mul(checked::mul(checked::pow2(i), binomial(d - i, j - i)), f[i]);
            acc = checked::add(acc, checked::sign(j - i) * term);
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return ShortCubicalHVector(d, std::move(h));
}

inline ShortCubicalHVector h_short_cubical(const CubicalComplex& complex)
{
    return h_short_cubical_from_f(f_vector(complex));
}

/// Second route: the sum over vertices of the simplicial h-vectors of the
/// vertex links, each taken with parameter d = dim K.
inline ShortCubicalHVector h_short_cubical_from_links(const CubicalComplex& complex)
{
    const int d = complex.dim();
    if (d < 0) {
        throw InvalidArgument("short cubical h-vector is undefined for the empty complex");
    }
    std::vector<Int> h(static_cast<std::size_t>(d + 1), 0);
    for (VertexId v : complex.vertices()) {
        const auto link_h = h_simplicial(f_vector(link_of_vertex(complex, v)), d);
        for (int j = 0; j <= d; ++j) {
            h[static_cast<std::size_t>(j)] = checked::add(h[static_cast<std::size_t>(j)], link_h[j]);
        }
    }
    return ShortCubicalHVector(d, std::move(h));
}

/// Long cubical h-vector: h_0 = 2^d and h_{i+1} = h^{sc}_i - h_i.
inline LongCubicalHVector h_long_cubical(const ShortCubicalHVector& short_h)
{
    const int d = short_h.d();
    std::vector<Int> h(static_cast<std::size_t>(d + 2), 0);
    h[0] = checked::pow2(d);
    for (int i = 0; i <= d; ++i) {
        h[static_cast<std::size_t>(i + 1)] = checked::sub(short_h[i], h[static_cast<std::size_t>(i)]);
    }
    return LongCubicalHVector(d, std::move(h));
}

inline LongCubicalHVector h_long_cubical(const CubicalComplex& complex)
{
    return h_long_cubical(h_short_cubical(complex));
}

/// Non-recursive form: h_{i+1} = (-1)^{i+1} h_0 + Σ_{j<=i} (-1)^{i-j} h^{sc}_j.
inline LongCubicalHVector h_long_cubical_closed_form(const ShortCubicalHVector& short_h)
{
    const int d = short_h.d();
    const Int h0 = checked::pow2(d);
    std::vector<Int> h(static_cast<std::size_t>(d + 2), 0);
    h[0] = h0;
    for (int i = 0; i <= d; ++i) {
        Int acc = checked::sign(i + 1) * h0;
        for (int j = 0; j <= i; ++j) {
            acc = checked::add(acc, checked::sign(i - j) * short_h[j]);
        }
        h[static_cast<std::size_t>(i + 1)] = acc;
    }
    return LongCubicalHVector(d, std::move(h));
}

/// g_0 = h_0 and g_i = h_i - h_{i-1} for 1 <= i <= m.
template <HKind K>
GVector<K> g_vector(const HVector<K>& h, int m)
{
    if (m < 0 || static_cast<std::size_t>(m) >= h.size()) {
        throw InvalidArgument("g_vector truncation index out of range");
    }
    std::vector<Int> g(static_cast<std::size_t>(m + 1));
    g[0] = h[0];
    for (int i = 1; i <= m; ++i) {
        g[static_cast<std::size_t>(i)] = checked::sub(h[i], h[i - 1]);
    }
    return GVector<K>(std::move(g));
}

/// All successive differences, g_0..g_{size-1}.
template <HKind K>
GVector<K> g_vector(const HVector<K>& h)
{
    return g_vector(h, static_cast<int>(h.size()) - 1);
}

/// Standard truncation: ⌊d/2⌋ for simplicial h, ⌊(d+1)/2⌋ for long cubical h.
template <HKind K>
int standard_g_range(const HVector<K>& h)
{
    if constexpr (K == HKind::long_cubical) {
        return (h.d() + 1) / 2;
    } else {
        return h.d() / 2;
    }
}

} // namespace cubical
