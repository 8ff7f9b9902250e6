#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cubical/classify.hpp"
#include "cubical/cubical_complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/simplicial_complex.hpp"
#include "cubical/topology.hpp"

namespace cubical {

namespace detail {

inline std::string join_params(const std::vector<int>& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += (i ? "," : "") + std::to_string(p[i]);
    }
    return s;
}

/// Row-major flattening of grid points with coordinate t in [0, extent[t]).
class Grid
{
public:
    explicit Grid(std::vector<int> extent)
        : m_extent(std::move(extent))
        , m_stride(m_extent.size(), 1)
    {
        for (std::size_t t = m_extent.size(); t-- > 1;) {
            m_stride[t - 1] = m_stride[t] * static_cast<VertexId>(m_extent[t]);
        }
    }

    VertexId id(const std::vector<int>& point) const
    {
        VertexId out = 0;
        for (std::size_t t = 0; t < point.size(); ++t) {
            out += static_cast<VertexId>(point[t]) * m_stride[t];
        }
        return out;
    }

private:
    std::vector<int> m_extent;
    std::vector<VertexId> m_stride;
};

/// Unit n-cubes at the given lower corners, inside a grid of points with the given
/// extents; coordinates wrap modulo the extent when `periodic` is set.
inline std::vector<CubicalCell> unit_cubes(const std::vector<std::vector<int>>& positions, const std::vector<int>& extent,
                                           bool periodic)
{
    const Grid grid(extent);
    const int n = static_cast<int>(extent.size());
    std::vector<CubicalCell> cells;
    cells.reserve(positions.size());
    for (const auto& p : positions) {
        std::vector<VertexId> corners(std::size_t{1} << n);
        for (unsigned b = 0; b < corners.size(); ++b) {
            std::vector<int> q = p;
            for (int t = 0; t < n; ++t) {
                q[static_cast<std::size_t>(t)] += (b >> t) & 1u;
                if (periodic) {
                    q[static_cast<std::size_t>(t)] %= extent[static_cast<std::size_t>(t)];
                }
            }
            corners[b] = grid.id(q);
        }
        cells.emplace_back(n, std::move(corners));
    }
    return cells;
}

/// All lower corners of a box of cubes, in lexicographic order.
inline std::vector<std::vector<int>> box_positions(const std::vector<int>& sides)
{
    std::vector<std::vector<int>> out;
    std::vector<int> p(sides.size(), 0);
    while (true) {
        out.push_back(p);
        std::size_t t = sides.size();
        while (t-- > 0) {
            if (++p[t] < sides[t]) {
                break;
            }
            p[t] = 0;
        }
        if (t == static_cast<std::size_t>(-1)) {
            return out;
        }
    }
}

inline GeneratedComplex polycube(const std::vector<std::vector<int>>& positions, const std::vector<int>& box_sides,
                                 std::string provenance)
{
    std::vector<int> extent = box_sides;
    for (int& e : extent) {
        ++e;
    }
    GeneratedComplex g;
    g.complex = build_cubical(unit_cubes(positions, extent, false));
    g.topology = Topology::ball;
    g.provenance = std::move(provenance);
    return g;
}

inline GeneratedComplex boundary_of(const GeneratedComplex& ball, std::string provenance, bool polytopal)
{
    GeneratedComplex g;
    g.complex = boundary_complex(ball.cubical());
    g.topology = Topology::sphere;
    g.polytopal = polytopal;
    g.provenance = std::move(provenance);
    return g;
}

} // namespace detail

/// The a_1 × ... × a_n grid of unit n-cubes, a cubical n-ball.
inline GeneratedComplex pile_of_cubes(const std::vector<int>& sides)
{
    if (sides.empty()) {
        throw InvalidArgument("pile_of_cubes needs at least one side length");
    }
    for (int a : sides) {
        if (a < 1) {
            throw InvalidArgument("pile_of_cubes side lengths must be >= 1");
        }
    }
    return detail::polycube(detail::box_positions(sides), sides, "pile(" + detail::join_params(sides) + ")");
}

/// Boundary sphere of a pile. Flagged polytopal only for linear stacks (at most one side > 1).
inline GeneratedComplex pile_boundary(const std::vector<int>& sides)
{
    if (sides.size() < 2) {
        throw InvalidArgument("pile_boundary needs a pile of dimension >= 2");
    }
    const auto long_sides = std::count_if(sides.begin(), sides.end(), [](int a) { return a > 1; });
    return detail::boundary_of(pile_of_cubes(sides), "pile_boundary(" + detail::join_params(sides) + ")",
                               long_sides <= 1);
}

/// The full n-cube with its top cell; n = 0 gives a single point.
inline GeneratedComplex solid_cube(int n)
{
    if (n < 0) {
        throw InvalidArgument("solid_cube needs n >= 0");
    }
    if (n == 0) {
        GeneratedComplex g;
        g.complex = build_cubical({CubicalCell(0, {0})});
        g.topology = Topology::ball;
        g.provenance = "solid_cube(0)";
        return g;
    }
    GeneratedComplex g = pile_of_cubes(std::vector<int>(static_cast<std::size_t>(n), 1));
    g.provenance = "solid_cube(" + std::to_string(n) + ")";
    return g;
}

/// Boundary of C^n, a cubical (n-1)-sphere with f_i = C(n,i) 2^{n-i}.
inline GeneratedComplex cube_boundary(int n)
{
    if (n < 1) {
        throw InvalidArgument("cube_boundary needs n >= 1");
    }
    return detail::boundary_of(solid_cube(n), "cube_boundary(" + std::to_string(n) + ")", true);
}

/**
 * Periodic grid on the d-torus with the given numbers of vertices per axis.
 * Parameters are accepted iff the result passes validation and really has
 * one top cell per grid position.
 */
inline GeneratedComplex cubical_torus(const std::vector<int>& sides)
{
    if (sides.empty()) {
        throw InvalidArgument("cubical_torus needs at least one axis");
    }
    const std::string name = "torus(" + detail::join_params(sides) + ")";
    for (int n : sides) {
        if (n < 1) {
            throw ValidationFailed(name + ": axis lengths must be positive");
        }
    }
    GeneratedComplex g;
    g.topology = Topology::torus;
    g.provenance = name;
    try {
        g.complex = build_cubical(detail::unit_cubes(detail::box_positions(sides), sides, true));
    } catch (const ValidationError& e) {
        throw ValidationFailed(name + " is not a cubical complex: " + e.what());
    }
    Int expected_cells = 1;
    for (int n : sides) {
        expected_cells = checked::mul(expected_cells, n);
    }
    if (g.cubical().count(static_cast<int>(sides.size())) != expected_cells) {
        throw ValidationFailed(name + ": distinct grid cells collapse onto the same vertex set");
    }
    if (auto why = topology_inconsistency(g)) {
        throw ValidationFailed(name + ": " + *why);
    }
    return g;
}

enum class Stacking
{
    linear,   ///< cubes in a row, pile(n, 1, ..., 1)
    branching ///< a T-shaped tree of cubes: a centre cube with arms along +x, -x, +y
};

struct StackedCubical
{
    GeneratedComplex ball;
    GeneratedComplex sphere;
};

/// n_cells (dim)-cubes stacked facet to facet, and the boundary sphere of the stack.
inline StackedCubical stacked_cubical(int n_cells, int dim, Stacking stacking = Stacking::linear)
{
    if (n_cells < 1 || dim < 2) {
        throw InvalidArgument("stacked_cubical needs n_cells >= 1 and cube dimension >= 2");
    }
    const std::string tag = std::to_string(n_cells) + "," + std::to_string(dim);
    if (stacking == Stacking::linear) {
        std::vector<int> sides(static_cast<std::size_t>(dim), 1);
        sides[0] = n_cells;
        GeneratedComplex ball = pile_of_cubes(sides);
        ball.provenance = "stacked_cubical_ball(" + tag + ")";
        GeneratedComplex sphere = detail::boundary_of(ball, "stacked_cubical_sphere(" + tag + ")", true);
        return {std::move(ball), std::move(sphere)};
    }

    // arms: cells 1, 4, 7, ... go to +x, 2, 5, ... to -x, 3, 6, ... to +y
    int arm[3] = {0, 0, 0};
    for (int c = 1; c < n_cells; ++c) {
        ++arm[(c - 1) % 3];
    }
    const int centre_x = arm[1];
    std::vector<std::vector<int>> positions;
    auto at = [&](int x, int y) {
        std::vector<int> p(static_cast<std::size_t>(dim), 0);
        p[0] = x;
        p[1] = y;
        positions.push_back(std::move(p));
    };
    at(centre_x, 0);
    for (int s = 0; s < arm[0]; ++s) {
        at(centre_x + 1 + s, 0);
    }
    for (int s = 0; s < arm[1]; ++s) {
        at(centre_x - 1 - s, 0);
    }
    for (int s = 0; s < arm[2]; ++s) {
        at(centre_x, 1 + s);
    }
    std::sort(positions.begin(), positions.end());
    std::vector<int> box(static_cast<std::size_t>(dim), 1);
    box[0] = arm[0] + arm[1] + 1;
    box[1] = arm[2] + 1;
    GeneratedComplex ball = detail::polycube(positions, box, "stacked_cubical_ball(" + tag + ",branching)");
    GeneratedComplex sphere = detail::boundary_of(ball, "stacked_cubical_sphere(" + tag + ",branching)", false);
    return {std::move(ball), std::move(sphere)};
}

/// K × [0,1]. Vertex (v, t) is labelled 2v + t; the new coordinate is the top bit.
inline GeneratedComplex prism(const GeneratedComplex& base)
{
    const CubicalComplex& k = base.cubical();
    if (k.empty()) {
        throw InvalidArgument("prism of the empty complex");
    }
    std::vector<CubicalCell> cells;
    for (const CubicalCell& c : k.facet_cells()) {
        std::vector<VertexId> corners(c.corners.size() * 2);
        for (std::size_t b = 0; b < c.corners.size(); ++b) {
            corners[b] = 2 * c.corners[b];
            corners[b + c.corners.size()] = 2 * c.corners[b] + 1;
        }
        cells.emplace_back(c.dim + 1, std::move(corners));
    }
    GeneratedComplex g;
    g.complex = build_cubical(cells);
    switch (base.topology) {
    case Topology::ball: g.topology = Topology::ball; break;
    case Topology::none: g.topology = Topology::none; break;
    default: g.topology = Topology::manifold_with_boundary; break;
    }
    g.provenance = "prism(" + base.provenance + ")";
    return g;
}

/// The full d-simplex on vertices 0..d.
inline GeneratedComplex simplex(int d)
{
    if (d < 0) {
        throw InvalidArgument("simplex needs d >= 0");
    }
    Simplex all(static_cast<std::size_t>(d + 1));
    std::iota(all.begin(), all.end(), VertexId{0});
    GeneratedComplex g;
    g.complex = build_simplicial({all});
    g.topology = Topology::ball;
    g.provenance = "simplex(" + std::to_string(d) + ")";
    return g;
}

/// Boundary of the d-simplex, a (d-1)-sphere with h = (1, ..., 1).
inline GeneratedComplex simplex_boundary(int d)
{
    if (d < 1) {
        throw InvalidArgument("simplex_boundary needs d >= 1");
    }
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= d; ++skip) {
        Simplex f;
        for (int v = 0; v <= d; ++v) {
            if (v != skip) {
                f.push_back(static_cast<VertexId>(v));
            }
        }
        facets.push_back(std::move(f));
    }
    GeneratedComplex g;
    g.complex = build_simplicial(facets);
    g.topology = Topology::sphere;
    g.polytopal = true;
    g.provenance = "simplex_boundary(" + std::to_string(d) + ")";
    return g;
}

/// Boundary of the d-dimensional cross-polytope; ±e_i are vertices 2i and 2i+1.
inline GeneratedComplex cross_polytope_boundary(int d)
{
    if (d < 1 || d > 20) {
        throw InvalidArgument("cross_polytope_boundary needs 1 <= d <= 20");
    }
    std::vector<Simplex> facets;
    for (unsigned signs = 0; signs < (1u << d); ++signs) {
        Simplex f;
        for (int i = 0; i < d; ++i) {
            f.push_back(static_cast<VertexId>(2 * i + ((signs >> i) & 1u)));
        }
        facets.push_back(std::move(f));
    }
    GeneratedComplex g;
    g.complex = build_simplicial(facets);
    g.topology = Topology::sphere;
    g.polytopal = true;
    g.provenance = "cross_polytope_boundary(" + std::to_string(d) + ")";
    return g;
}

enum class Gluing
{
    linear, ///< facet i is {i, ..., i+d}
    tree    ///< each new simplex is glued to a free ridge of a randomly chosen earlier facet
};

/**
 * A stacked simplicial d-ball: n_facets d-simplices glued facet to facet
 * along a tree, each new simplex bringing one new vertex. It has d + n_facets
 * vertices. The tree variant is deterministic for a given seed.
 */
inline GeneratedComplex stacked_simplicial_ball(int d, int n_facets, Gluing gluing = Gluing::linear,
                                                std::uint64_t seed = 1)
{
    if (d < 1 || n_facets < 1) {
        throw InvalidArgument("stacked_simplicial_ball needs d >= 1 and n_facets >= 1");
    }
    std::vector<Simplex> facets;
    Simplex first(static_cast<std::size_t>(d + 1));
    std::iota(first.begin(), first.end(), VertexId{0});
    facets.push_back(first);
    VertexId next_vertex = static_cast<VertexId>(d + 1);

    std::map<Simplex, int> ridge_use;
    auto record = [&](const Simplex& f) {
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex r = f;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
            ++ridge_use[r];
        }
    };
    record(first);

    std::mt19937_64 rng(seed);
    for (int c = 1; c < n_facets; ++c) {
        Simplex ridge;
        if (gluing == Gluing::linear) {
            ridge.assign(facets.back().begin() + 1, facets.back().end());
        } else {
            std::vector<std::pair<std::size_t, Simplex>> options;
            for (std::size_t fi = 0; fi < facets.size(); ++fi) {
                for (std::size_t drop = 0; drop < facets[fi].size(); ++drop) {
                    Simplex r = facets[fi];
                    r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
                    if (ridge_use[r] == 1) {
                        options.emplace_back(fi, std::move(r));
                        break;
                    }
                }
            }
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            ridge = options[pick(rng)].second;
        }
        Simplex f = ridge;
        f.push_back(next_vertex++);
        facets.push_back(f);
        record(f);
    }
    GeneratedComplex g;
    g.complex = build_simplicial(facets);
    g.topology = Topology::ball;
    g.provenance = std::string("stacked_simplicial_ball(") + std::to_string(d) + "," + std::to_string(n_facets) +
                   (gluing == Gluing::tree ? ",tree," + std::to_string(seed) : "") + ")";
    return g;
}

/// Boundary of a stacked d-ball: a stacked (d-1)-sphere on d + n_facets vertices.
inline GeneratedComplex stacked_sphere(int d, int n_facets, Gluing gluing = Gluing::linear, std::uint64_t seed = 1)
{
    if (d < 2) {
        throw InvalidArgument("stacked_sphere needs a ball of dimension >= 2");
    }
    const GeneratedComplex ball = stacked_simplicial_ball(d, n_facets, gluing, seed);
    GeneratedComplex g;
    g.complex = boundary_complex(ball.simplicial());
    g.topology = Topology::sphere;
    g.polytopal = true;
    g.provenance = "stacked_sphere(" + ball.provenance.substr(ball.provenance.find('(') + 1);
    return g;
}

} // namespace cubical
