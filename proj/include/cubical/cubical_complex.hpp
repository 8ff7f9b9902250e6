#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubical/errors.hpp"
#include "cubical/integer.hpp"
#include "cubical/simplicial_complex.hpp"

namespace cubical {

/// Index of a nonempty face inside one CubicalComplex.
using FaceId = std::size_t;

/**
 * A combinatorial k-cube given by its corners. corners[b] is the vertex at
 * cube coordinate b, where bit t of b is coordinate t.
 */
struct CubicalCell
{
    int dim = 0;
    std::vector<VertexId> corners;

    CubicalCell() = default;

    CubicalCell(int k, std::vector<VertexId> c)
        : dim(k)
        , corners(std::move(c))
    {
        if (k < 0 || k > 20) {
            throw InvalidCell("cell dimension " + std::to_string(k) + " out of range");
        }
        if (corners.size() != (std::size_t{1} << k)) {
            throw InvalidCell("a " + std::to_string(k) + "-cell needs " + std::to_string(std::size_t{1} << k) +
                              " corners, got " + std::to_string(corners.size()));
        }
    }

    bool operator==(const CubicalCell&) const = default;
};

/// A nonempty face: its vertex set plus one corner ordering witnessing the cube structure.
struct Face
{
    int dim = 0;
    std::vector<VertexId> vertices; // sorted
    std::vector<VertexId> corners;  // corners[b] as in CubicalCell
};

namespace detail {

/// Scatter the low bits of `value` into the set positions of `mask`.
inline unsigned deposit_bits(unsigned value, unsigned mask)
{
    unsigned out = 0;
    for (unsigned t = 0; mask != 0; mask &= mask - 1, ++t) {
        if (value & (1u << t)) {
            out |= mask & (~mask + 1);
        }
    }
    return out;
}

/// Corners of the subface whose free coordinates are `free_mask`, the other
/// coordinates fixed to the bits of `fixed`.
inline std::vector<VertexId> subface_corners(std::span<const VertexId> corners, unsigned free_mask, unsigned fixed)
{
    const int k = std::popcount(free_mask);
    std::vector<VertexId> out(std::size_t{1} << k);
    for (unsigned j = 0; j < out.size(); ++j) {
        out[j] = corners[fixed | deposit_bits(j, free_mask)];
    }
    return out;
}

/// Calls fn(free_mask, fixed) for all 3^k subfaces of a k-cube.
template <class Fn>
void for_each_subface(int k, Fn&& fn)
{
    const unsigned full = (1u << k) - 1;
    for (unsigned free_mask = 0; free_mask <= full; ++free_mask) {
        const unsigned rest = full & ~free_mask;
        for (unsigned fixed = rest;; fixed = (fixed - 1) & rest) {
            fn(free_mask, fixed);
            if (fixed == 0) {
                break;
            }
        }
    }
}

/// Sorted vertex set of a subface, written into a reusable buffer.
inline void subface_key(std::span<const VertexId> corners, unsigned free_mask, unsigned fixed,
                        std::vector<VertexId>& out)
{
    const std::size_t n = std::size_t{1} << std::popcount(free_mask);
    out.resize(n);
    for (unsigned j = 0; j < n; ++j) {
        out[j] = corners[fixed | deposit_bits(j, free_mask)];
    }
    std::sort(out.begin(), out.end());
}

inline std::vector<VertexId> sorted_copy(std::span<const VertexId> v)
{
    std::vector<VertexId> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Edge set of a cube given by its corners; determines the cube's face poset.
inline std::vector<std::pair<VertexId, VertexId>> cube_edges(std::span<const VertexId> corners)
{
    std::vector<std::pair<VertexId, VertexId>> out;
    const unsigned n = static_cast<unsigned>(corners.size());
    for (unsigned b = 0; b < n; ++b) {
        for (unsigned bit = 1; bit < n; bit <<= 1) {
            if (!(b & bit)) {
                out.emplace_back(std::minmax(corners[b], corners[b | bit]));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Two corner orderings of one vertex set describe the same cube iff
/// relabelling one by the other preserves adjacency.
inline bool same_cube_structure(std::span<const VertexId> a, std::span<const VertexId> b)
{
    const std::size_t n = a.size();
    if (n <= 2) {
        return true;
    }
    if (n > 64) {
        return cube_edges(a) == cube_edges(b);
    }
    unsigned pos[64];
    for (std::size_t i = 0; i < n; ++i) {
        pos[i] = static_cast<unsigned>(std::find(b.begin(), b.end(), a[i]) - b.begin());
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned bit = 1; bit < n; bit <<= 1) {
            if (!(i & bit) && std::popcount(pos[i] ^ pos[i | bit]) != 1) {
                return false;
            }
        }
    }
    return true;
}

inline std::string format_set(std::span<const VertexId> v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

struct VertexSetHash
{
    std::size_t operator()(const std::vector<VertexId>& v) const noexcept
    {
        std::size_t h = v.size();
        for (VertexId x : v) {
            h ^= std::hash<VertexId>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <class T>
using VertexSetMap = std::unordered_map<std::vector<VertexId>, T, VertexSetHash>;

inline bool is_subset(std::span<const VertexId> small, std::span<const VertexId> big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace detail

class CubicalComplex;
CubicalComplex build_cubical(const std::vector<CubicalCell>& cells);

/**
 * A finite cubical complex. Faces are identified by their vertex sets; the
 * empty face is implicit. Nonempty faces are numbered by FaceId in (dimension,
 * vertex set) order, which makes every traversal deterministic.
 *
 * Instances are immutable once built. Use build_cubical() to construct one
 * from cells; it checks all four complex axioms.
 */
class CubicalComplex
{
public:
    /// The complex {∅}.
    CubicalComplex() = default;

    /// -1 for the empty complex.
    int dim() const { return m_dim; }
    bool empty() const { return m_faces.empty(); }

    std::span<const Face> faces() const { return m_faces; }
    const Face& face(FaceId id) const { return m_faces.at(id); }

    /// Number of i-dimensional faces (f_{-1} = 1).
    Int count(int i) const
    {
        if (i == -1) {
            return 1;
        }
        if (i < -1 || i > m_dim) {
            return 0;
        }
        return static_cast<Int>(m_dim_offsets[static_cast<std::size_t>(i) + 1] -
                                m_dim_offsets[static_cast<std::size_t>(i)]);
    }

    /// FaceIds of the i-dimensional faces (contiguous range).
    std::vector<FaceId> faces_of_dim(int i) const
    {
        std::vector<FaceId> out;
        if (i < 0 || i > m_dim) {
            return out;
        }
        for (FaceId id = m_dim_offsets[static_cast<std::size_t>(i)];
             id < m_dim_offsets[static_cast<std::size_t>(i) + 1]; ++id) {
            out.push_back(id);
        }
        return out;
    }

    std::optional<FaceId> find(std::span<const VertexId> vertex_set) const
    {
        auto it = m_index.find(detail::sorted_copy(vertex_set));
        if (it == m_index.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    FaceId face_id(std::span<const VertexId> vertex_set) const
    {
        auto id = find(vertex_set);
        if (!id) {
            throw UnknownFace("no face with vertex set " + detail::format_set(detail::sorted_copy(vertex_set)));
        }
        return *id;
    }

    /// FaceId of the subface of F with free coordinates free_mask and the rest fixed to `fixed`.
    FaceId subface_id(const Face& F, unsigned free_mask, unsigned fixed) const
    {
        thread_local std::vector<VertexId> key;
        detail::subface_key(F.corners, free_mask, fixed, key);
        return m_index.at(key);
    }

    std::span<const VertexId> vertices() const { return m_vertices; }

    bool has_vertex(VertexId v) const { return std::binary_search(m_vertices.begin(), m_vertices.end(), v); }

    /// Faces containing v, in FaceId order (so by dimension first).
    std::span<const FaceId> faces_containing(VertexId v) const { return m_incidence[vertex_slot(v)]; }

    /// All faces G with G ⊇ F (F itself included), in FaceId order.
    std::vector<FaceId> cofaces(FaceId f) const
    {
        const Face& F = m_faces.at(f);
        // scan the smallest incidence list among F's vertices
        VertexId pivot = F.vertices.front();
        for (VertexId v : F.vertices) {
            if (faces_containing(v).size() < faces_containing(pivot).size()) {
                pivot = v;
            }
        }
        std::vector<FaceId> out;
        for (FaceId g : faces_containing(pivot)) {
            if (m_faces[g].dim >= F.dim && detail::is_subset(F.vertices, m_faces[g].vertices)) {
                out.push_back(g);
            }
        }
        return out;
    }

    /// Inclusion-maximal faces.
    std::span<const FaceId> facets() const { return m_facets; }

    /// The maximal faces as cells, with their witness corner orderings.
    std::vector<CubicalCell> facet_cells() const
    {
        std::vector<CubicalCell> out;
        for (FaceId id : m_facets) {
            out.emplace_back(m_faces[id].dim, m_faces[id].corners);
        }
        return out;
    }

    /// Closure of the given faces inside this complex. The result needs no
    /// revalidation: a downward-closed subfamily of a complex is a complex.
    CubicalComplex subcomplex(std::span<const FaceId> generators) const
    {
        std::vector<bool> keep(m_faces.size(), false);
        for (FaceId g : generators) {
            keep.at(g) = true;
        }
        // FaceIds grow with dimension, so one downward pass over codimension-one faces suffices
        std::vector<VertexId> key;
        for (FaceId id = m_faces.size(); id-- > 0;) {
            const Face& G = m_faces[id];
            if (!keep[id] || G.dim == 0) {
                continue;
            }
            for (int t = 0; t < G.dim; ++t) {
                const unsigned free_mask = ((1u << G.dim) - 1) & ~(1u << t);
                for (unsigned side : {0u, 1u << t}) {
                    detail::subface_key(G.corners, free_mask, side, key);
                    keep[m_index.at(key)] = true;
                }
            }
        }
        std::vector<Face> faces;
        for (FaceId id = 0; id < m_faces.size(); ++id) {
            if (keep[id]) {
                faces.push_back(m_faces[id]);
            }
        }
        return from_closed_faces(std::move(faces));
    }

    /// Same face set (vertex sets and dimensions); witness orderings are ignored.
    bool operator==(const CubicalComplex& other) const
    {
        if (m_faces.size() != other.m_faces.size()) {
            return false;
        }
        for (std::size_t i = 0; i < m_faces.size(); ++i) {
            if (m_faces[i].dim != other.m_faces[i].dim || m_faces[i].vertices != other.m_faces[i].vertices) {
                return false;
            }
        }
        return true;
    }

private:
    friend CubicalComplex build_cubical(const std::vector<CubicalCell>& cells);

    std::size_t vertex_slot(VertexId v) const
    {
        auto it = std::lower_bound(m_vertices.begin(), m_vertices.end(), v);
        if (it == m_vertices.end() || *it != v) {
            throw UnknownVertex("vertex " + std::to_string(v) + " is not in the complex");
        }
        return static_cast<std::size_t>(it - m_vertices.begin());
    }

    /// Index a family of faces that is already known to be closed and valid.
    static CubicalComplex from_closed_faces(std::vector<Face> faces)
    {
        CubicalComplex k;
        k.m_index.reserve(faces.size());
        std::vector<std::size_t> order(faces.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return faces[a].dim != faces[b].dim ? faces[a].dim < faces[b].dim : faces[a].vertices < faces[b].vertices;
        });
        k.m_faces.reserve(faces.size());
        for (std::size_t i : order) {
            k.m_faces.push_back(std::move(faces[i]));
        }
        k.m_dim = k.m_faces.empty() ? -1 : k.m_faces.back().dim;

        k.m_dim_offsets.assign(static_cast<std::size_t>(k.m_dim + 2), 0);
        for (const Face& f : k.m_faces) {
            ++k.m_dim_offsets[static_cast<std::size_t>(f.dim) + 1];
        }
        for (std::size_t i = 1; i < k.m_dim_offsets.size(); ++i) {
            k.m_dim_offsets[i] += k.m_dim_offsets[i - 1];
        }

        for (FaceId id = 0; id < k.m_faces.size(); ++id) {
            k.m_index.emplace(k.m_faces[id].vertices, id);
            if (k.m_faces[id].dim == 0) {
                k.m_vertices.push_back(k.m_faces[id].vertices.front());
            }
        }
        k.m_incidence.assign(k.m_vertices.size(), {});
        for (FaceId id = 0; id < k.m_faces.size(); ++id) {
            for (VertexId v : k.m_faces[id].vertices) {
                k.m_incidence[k.vertex_slot(v)].push_back(id);
            }
        }

        // G is non-maximal iff it is a codimension-one face of something
        std::vector<bool> covered(k.m_faces.size(), false);
        std::vector<VertexId> key;
        for (const Face& f : k.m_faces) {
            for (int t = 0; t < f.dim; ++t) {
                const unsigned free_mask = ((1u << f.dim) - 1) & ~(1u << t);
                for (unsigned side : {0u, 1u << t}) {
                    detail::subface_key(f.corners, free_mask, side, key);
                    covered[k.m_index.at(key)] = true;
                }
            }
        }
        for (FaceId id = 0; id < k.m_faces.size(); ++id) {
            if (!covered[id]) {
                k.m_facets.push_back(id);
            }
        }
        return k;
    }

    int m_dim = -1;
    std::vector<Face> m_faces;
    std::vector<std::size_t> m_dim_offsets;
    detail::VertexSetMap<FaceId> m_index;
    std::vector<VertexId> m_vertices;
    std::vector<std::vector<FaceId>> m_incidence; // parallel to m_vertices
    std::vector<FaceId> m_facets;
};

/**
 * Close a nonempty list of cells under subface extraction and check the
 * cubical complex axioms.
 *
 * Throws DuplicateVertexInCell, InconsistentSharedFace (two cells disagree on
 * the cube structure of a vertex set, or a face sits inside a cell without
 * being one of its cube faces) or IntersectionNotAFace.
 */
inline CubicalComplex build_cubical(const std::vector<CubicalCell>& cells)
{
    if (cells.empty()) {
        throw InvalidArgument("build_cubical needs at least one cell");
    }

    detail::VertexSetMap<Face> table;
    std::vector<VertexId> key;

    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const CubicalCell& cell = cells[ci];
        if (cell.dim < 0 || cell.corners.size() != (std::size_t{1} << cell.dim)) {
            throw InvalidCell("cell " + std::to_string(ci) + " has a malformed corner list");
        }
        auto sorted = detail::sorted_copy(cell.corners);
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw DuplicateVertexInCell("cell " + std::to_string(ci) + " repeats vertex " + std::to_string(*dup),
                                        {*dup});
        }

        detail::for_each_subface(cell.dim, [&](unsigned free_mask, unsigned fixed) {
            detail::subface_key(cell.corners, free_mask, fixed, key);
            auto it = table.find(key);
            if (it == table.end()) {
                table.emplace(key, Face{std::popcount(free_mask), key,
                                        detail::subface_corners(cell.corners, free_mask, fixed)});
            } else if (it->second.corners.size() > 2 &&
                       !detail::same_cube_structure(it->second.corners,
                                                    detail::subface_corners(cell.corners, free_mask, fixed))) {
                throw InconsistentSharedFace("cells disagree on the cube structure of " + detail::format_set(key),
                                             key);
            }
        });
    }

    std::vector<Face> faces;
    faces.reserve(table.size());
    for (auto& [key, face] : table) {
        faces.push_back(std::move(face));
    }
    CubicalComplex k = CubicalComplex::from_closed_faces(std::move(faces));

    // Interval axiom: every face inside a cell's vertex set is one of its cube
    // faces, i.e. its corner positions fill a subcube of the cell.
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& corners = cells[ci].corners;
        std::vector<std::pair<VertexId, unsigned>> position;
        position.reserve(corners.size());
        for (unsigned b = 0; b < corners.size(); ++b) {
            position.emplace_back(corners[b], b);
        }
        std::sort(position.begin(), position.end());
        std::vector<VertexId> cell_vertices;
        cell_vertices.reserve(position.size());
        for (auto [v, b] : position) {
            cell_vertices.push_back(v);
        }
        auto where = [&](VertexId v) {
            return std::lower_bound(position.begin(), position.end(), std::pair<VertexId, unsigned>{v, 0u})->second;
        };
        for (VertexId v : cell_vertices) {
            for (FaceId g : k.faces_containing(v)) {
                const Face& G = k.face(g);
                // each face is tested once per cell, at its smallest vertex
                if (G.vertices.front() != v || G.dim > cells[ci].dim || !detail::is_subset(G.vertices, cell_vertices)) {
                    continue;
                }
                unsigned all = ~0u;
                unsigned any = 0;
                for (VertexId u : G.vertices) {
                    const unsigned b = where(u);
                    all &= b;
                    any |= b;
                }
                if (G.vertices.size() != (std::size_t{1} << std::popcount(any & ~all))) {
                    throw InconsistentSharedFace("face " + detail::format_set(G.vertices) + " lies inside cell " +
                                                     detail::format_set(cell_vertices) +
                                                     " without being one of its faces",
                                                 G.vertices);
                }
            }
        }
    }

    // Intersection axiom, checked on pairs of maximal faces that meet.
    std::vector<bool> is_facet(k.faces().size(), false);
    for (FaceId f : k.facets()) {
        is_facet[f] = true;
    }
    std::vector<VertexId> meet;
    for (VertexId v : k.vertices()) {
        std::vector<FaceId> around;
        for (FaceId g : k.faces_containing(v)) {
            if (is_facet[g]) {
                around.push_back(g);
            }
        }
        for (std::size_t a = 0; a < around.size(); ++a) {
            for (std::size_t b = a + 1; b < around.size(); ++b) {
                const auto& A = k.face(around[a]).vertices;
                const auto& B = k.face(around[b]).vertices;
                meet.clear();
                std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(meet));
                // the pair is checked once, at its smallest common vertex
                if (meet.front() == v && !k.find(meet)) {
                    throw IntersectionNotAFace(detail::format_set(A) + " and " + detail::format_set(B) +
                                                   " meet in " + detail::format_set(meet) + ", which is not a face",
                                               meet);
                }
            }
        }
    }
    return k;
}

/**
 * Link of a nonempty face F as a simplicial complex. Its vertices are the
 * FaceIds of the (dim F + 1)-faces containing F; a coface G of dimension
 * dim F + j becomes the (j-1)-simplex of the (dim F + 1)-faces between F and G.
 */
inline SimplicialComplex link_face(const CubicalComplex& complex, std::span<const VertexId> face_vertices)
{
    const FaceId f = complex.face_id(face_vertices);
    const int k = complex.face(f).dim;
    const auto up = complex.cofaces(f);
    std::vector<FaceId> next;
    for (FaceId g : up) {
        if (complex.face(g).dim == k + 1) {
            next.push_back(g);
        }
    }
    std::vector<Simplex> simplices;
    simplices.reserve(up.size());
    for (FaceId g : up) {
        const auto& G = complex.face(g).vertices;
        Simplex s;
        for (FaceId e : next) {
            if (detail::is_subset(complex.face(e).vertices, G)) {
                s.push_back(e);
            }
        }
        simplices.push_back(std::move(s));
    }
    return SimplicialComplex::closure_of(simplices);
}

/// Link of a vertex; its vertices are the FaceIds of the edges through v.
inline SimplicialComplex link_of_vertex(const CubicalComplex& complex, VertexId v)
{
    if (!complex.has_vertex(v)) {
        throw UnknownVertex("vertex " + std::to_string(v) + " is not in the complex");
    }
    const VertexId single[] = {v};
    return link_face(complex, single);
}

inline bool is_pure(const CubicalComplex& complex)
{
    for (FaceId f : complex.facets()) {
        if (complex.face(f).dim != complex.dim()) {
            return false;
        }
    }
    return true;
}

/// For each ridge in FaceId order, the number of facets containing it. Requires a pure
/// complex of dimension >= 1.
inline std::vector<std::pair<FaceId, int>> ridge_degrees(const CubicalComplex& complex)
{
    const int d = complex.dim();
    if (d < 1) {
        throw InvalidArgument("ridges need dimension >= 1");
    }
    if (!is_pure(complex)) {
        throw NotPure("ridge degrees need a pure complex");
    }
    const auto ridges = complex.faces_of_dim(d - 1);
    std::vector<std::pair<FaceId, int>> degree;
    degree.reserve(ridges.size());
    for (FaceId ridge : ridges) {
        degree.emplace_back(ridge, 0);
    }
    for (FaceId f : complex.facets()) {
        const Face& F = complex.face(f);
        for (int t = 0; t < d; ++t) {
            const unsigned free_mask = ((1u << d) - 1) & ~(1u << t);
            for (unsigned side : {0u, 1u << t}) {
                ++degree[complex.subface_id(F, free_mask, side) - ridges.front()].second;
            }
        }
    }
    return degree;
}

/**
 * Closure of the ridges contained in exactly one facet. Empty for a
 * pseudomanifold without boundary. Requires a pure complex of dimension >= 1.
 */
inline CubicalComplex boundary_complex(const CubicalComplex& complex)
{
    std::vector<FaceId> free_ridges;
    for (auto [ridge, count] : ridge_degrees(complex)) {
        if (count == 1) {
            free_ridges.push_back(ridge);
        }
    }
    return complex.subcomplex(free_ridges);
}

/**
 * The smallest face containing both u and v, if any face contains both.
 * It is the intersection of all such faces.
 */
inline std::optional<FaceId> least_upper_bound(const CubicalComplex& complex, VertexId u, VertexId v)
{
    if (u == v) {
        throw InvalidArgument("least_upper_bound needs two distinct vertices");
    }
    if (!complex.has_vertex(u)) {
        throw UnknownVertex("vertex " + std::to_string(u) + " is not in the complex");
    }
    if (!complex.has_vertex(v)) {
        throw UnknownVertex("vertex " + std::to_string(v) + " is not in the complex");
    }
    std::optional<std::vector<VertexId>> meet;
    for (FaceId g : complex.faces_containing(u)) {
        const auto& G = complex.face(g).vertices;
        if (!std::binary_search(G.begin(), G.end(), v)) {
            continue;
        }
        if (!meet) {
            meet = G;
        } else {
            std::vector<VertexId> next;
            std::set_intersection(meet->begin(), meet->end(), G.begin(), G.end(), std::back_inserter(next));
            meet = std::move(next);
        }
    }
    if (!meet) {
        return std::nullopt;
    }
    return complex.face_id(*meet);
}

/// The 2^{i-1} pairs (corner b, corner of the complementary bit string) of an i-face.
inline std::vector<std::pair<VertexId, VertexId>> antipodal_pairs(const Face& face)
{
    if (face.dim < 1) {
        throw ZeroDimensionalFace("antipodal pairs need a face of dimension >= 1");
    }
    const unsigned full = (1u << face.dim) - 1;
    std::vector<std::pair<VertexId, VertexId>> out;
    for (unsigned b = 0; b < (1u << (face.dim - 1)); ++b) {
        out.emplace_back(face.corners[b], face.corners[full & ~b]);
    }
    return out;
}

} // namespace cubical
