#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cubical/errors.hpp"
#include "cubical/integer.hpp"

namespace cubical {

/// Vertex label. Labels are distinct within a complex; nothing assumes they are dense.
using VertexId = std::size_t;

/// A simplex as a strictly increasing list of vertex labels.
using Simplex = std::vector<VertexId>;

namespace detail {

inline bool shortlex_less(const Simplex& a, const Simplex& b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

inline Simplex normalized(Simplex s)
{
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw InvalidArgument("simplex lists a vertex twice");
    }
    return s;
}

} // namespace detail

/**
 * A finite abstract simplicial complex, stored as the full downward-closed
 * family of its faces (the empty face included).
 *
 * Faces are kept in shortlex order, so iteration order is deterministic and
 * faces of one dimension are contiguous.
 */
class SimplicialComplex
{
public:
    /// The complex {∅}: dimension -1, f-vector (1).
    SimplicialComplex()
        : m_faces{Simplex{}}
    {
        index();
    }

    /// Downward closure of an arbitrary family of simplices.
    static SimplicialComplex closure_of(const std::vector<Simplex>& generators)
    {
        std::set<Simplex> all;
        all.insert(Simplex{});
        for (const Simplex& raw : generators) {
            const Simplex g = detail::normalized(raw);
            if (g.size() > 24) {
                throw InvalidArgument("simplex with more than 24 vertices");
            }
            const std::size_t n = g.size();
            for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
                Simplex sub;
                sub.reserve(static_cast<std::size_t>(std::popcount(mask)));
                for (std::size_t t = 0; t < n; ++t) {
                    if (mask & (std::size_t{1} << t)) {
                        sub.push_back(g[t]);
                    }
                }
                all.insert(std::move(sub));
            }
        }
        SimplicialComplex k;
        k.m_faces.assign(all.begin(), all.end());
        std::sort(k.m_faces.begin(), k.m_faces.end(), detail::shortlex_less);
        k.index();
        return k;
    }

    /// Largest face size minus one; -1 for {∅}.
    int dim() const { return static_cast<int>(m_offsets.size()) - 3; }

    std::span<const Simplex> faces() const { return m_faces; }

    /// Faces of dimension i (i >= -1).
    std::span<const Simplex> faces_of_dim(int i) const
    {
        const auto size = static_cast<std::size_t>(i + 1);
        if (i < -1 || size + 1 >= m_offsets.size()) {
            return {};
        }
        return std::span<const Simplex>(m_faces).subspan(m_offsets[size], m_offsets[size + 1] - m_offsets[size]);
    }

    Int count(int i) const { return static_cast<Int>(faces_of_dim(i).size()); }

    bool contains(const Simplex& s) const
    {
        return std::binary_search(m_faces.begin(), m_faces.end(), s, detail::shortlex_less);
    }

    std::vector<VertexId> vertices() const
    {
        std::vector<VertexId> out;
        for (const Simplex& s : faces_of_dim(0)) {
            out.push_back(s.front());
        }
        return out;
    }

    /// Inclusion-maximal faces, in shortlex order.
    std::vector<Simplex> facets() const
    {
        std::set<Simplex> covered;
        for (const Simplex& s : m_faces) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                covered.insert(std::move(sub));
            }
        }
        std::vector<Simplex> out;
        for (const Simplex& s : m_faces) {
            if (!covered.contains(s)) {
                out.push_back(s);
            }
        }
        return out;
    }

    bool operator==(const SimplicialComplex& other) const { return m_faces == other.m_faces; }

private:
    void index()
    {
        m_offsets.assign(1, 0);
        std::size_t size = 0;
        for (std::size_t pos = 0; pos < m_faces.size(); ++pos) {
            while (m_faces[pos].size() > size) {
                m_offsets.push_back(pos);
                ++size;
            }
        }
        m_offsets.push_back(m_faces.size());
    }

    std::vector<Simplex> m_faces;
    // faces of size s occupy [m_offsets[s], m_offsets[s+1])
    std::vector<std::size_t> m_offsets;
};

/// Downward closure of a nonempty list of facets.
inline SimplicialComplex build_simplicial(const std::vector<Simplex>& facets)
{
    if (facets.empty()) {
        throw InvalidArgument("build_simplicial needs at least one facet");
    }
    return SimplicialComplex::closure_of(facets);
}

/// Closure of the ridges lying in exactly one facet; {∅} when there are none.
/// Requires a pure complex of dimension >= 1.
inline SimplicialComplex boundary_complex(const SimplicialComplex& complex)
{
    const int d = complex.dim();
    if (d < 1) {
        throw InvalidArgument("boundary of a complex of dimension < 1");
    }
    const auto facets = complex.facets();
    std::set<Simplex> seen_once;
    std::set<Simplex> seen_twice;
    for (const Simplex& f : facets) {
        if (static_cast<int>(f.size()) != d + 1) {
            throw NotPure("boundary_complex: facet of dimension " + std::to_string(f.size() - 1) + " in a " +
                          std::to_string(d) + "-complex");
        }
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
            if (!seen_once.insert(ridge).second) {
                seen_twice.insert(std::move(ridge));
            }
        }
    }
    std::vector<Simplex> free_ridges;
    for (const Simplex& r : seen_once) {
        if (!seen_twice.contains(r)) {
            free_ridges.push_back(r);
        }
    }
    if (free_ridges.empty()) {
        return SimplicialComplex{};
    }
    return SimplicialComplex::closure_of(free_ridges);
}

} // namespace cubical
