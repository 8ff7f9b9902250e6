#pragma once

#include <optional>
#include <string>

#include "cubical/cubical_complex.hpp"
#include "cubical/enumerative.hpp"
#include "cubical/simplicial_complex.hpp"
#include "cubical/topology.hpp"

namespace cubical {

// is_pure(const CubicalComplex&) lives next to boundary_complex in cubical_complex.hpp.

inline bool is_pure(const SimplicialComplex& complex)
{
    for (const Simplex& f : complex.facets()) {
        if (static_cast<int>(f.size()) - 1 != complex.dim()) {
            return false;
        }
    }
    return true;
}

/// Every ridge lies in exactly two facets. Needs a pure complex of dimension >= 1.
inline bool is_pseudomanifold(const CubicalComplex& complex)
{
    if (complex.dim() < 1) {
        throw InvalidArgument("is_pseudomanifold needs dimension >= 1");
    }
    for (auto [ridge, count] : ridge_degrees(complex)) {
        if (count != 2) {
            return false;
        }
    }
    return true;
}

inline bool is_pseudomanifold(const SimplicialComplex& complex)
{
    if (complex.dim() < 1) {
        throw InvalidArgument("is_pseudomanifold needs dimension >= 1");
    }
    if (!is_pure(complex)) {
        throw NotPure("is_pseudomanifold needs a pure complex");
    }
    std::map<Simplex, int> degree;
    for (const Simplex& r : complex.faces_of_dim(complex.dim() - 1)) {
        degree[r] = 0;
    }
    for (const Simplex& f : complex.faces_of_dim(complex.dim())) {
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
            ++degree[ridge];
        }
    }
    for (const auto& [ridge, count] : degree) {
        if (count != 2) {
            return false;
        }
    }
    return true;
}

/// Ridges in at most two facets (pseudomanifold, possibly with boundary).
inline bool ridges_at_most_two(const CubicalComplex& complex)
{
    for (auto [ridge, count] : ridge_degrees(complex)) {
        if (count > 2) {
            return false;
        }
    }
    return true;
}

inline bool ridges_at_most_two(const SimplicialComplex& complex)
{
    if (!is_pure(complex)) {
        throw NotPure("ridge degrees need a pure complex");
    }
    std::map<Simplex, int> degree;
    for (const Simplex& f : complex.faces_of_dim(complex.dim())) {
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Simplex ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
            if (++degree[ridge] > 2) {
                return false;
            }
        }
    }
    return true;
}

/// First nonempty face whose link does not have the reduced Euler
/// characteristic of a (d - dim F - 1)-sphere, if any. Needs a pure complex.
inline std::optional<FaceId> semi_eulerian_witness(const CubicalComplex& complex)
{
    if (!is_pure(complex)) {
        throw NotPure("semi-Eulerian check needs a pure complex");
    }
    const int d = complex.dim();
    for (FaceId f = 0; f < complex.faces().size(); ++f) {
        const int k = complex.face(f).dim;
        if (link_reduced_euler(complex, f) != checked::sign(d - k - 1)) {
            return f;
        }
    }
    return std::nullopt;
}

inline bool is_semi_eulerian(const CubicalComplex& complex) { return !semi_eulerian_witness(complex); }

/// Semi-Eulerian with χ̃(K) = χ̃(S^d) = (-1)^d.
inline bool is_eulerian(const CubicalComplex& complex)
{
    return is_semi_eulerian(complex) && reduced_euler(complex) == checked::sign(complex.dim());
}

namespace detail {

template <class Complex>
std::optional<std::string> check_tag(const Complex& complex, Topology topology)
{
    const int d = complex.dim();
    if (topology == Topology::none) {
        return std::nullopt;
    }
    if (d < 0) {
        return "the empty complex carries no topology";
    }
    const Int chi = reduced_euler(f_vector(complex));
    if (is_closed(topology)) {
        if (d == 0) {
            // S^0 is the only closed 0-manifold we tag
            if (topology == Topology::sphere && complex.count(0) == 2) {
                return std::nullopt;
            }
            return "a closed 0-dimensional complex must be two points tagged sphere";
        }
        if (!is_pure(complex)) {
            return "closed manifold tag on a non-pure complex";
        }
        if (!is_pseudomanifold(complex)) {
            return "closed manifold tag but some ridge is not in exactly two facets";
        }
        if (topology == Topology::sphere && chi != checked::sign(d)) {
            return "sphere tag but reduced Euler characteristic is " + std::to_string(chi);
        }
        return std::nullopt;
    }
    // ball or manifold with boundary
    if (topology == Topology::ball && chi != 0) {
        return "ball tag but reduced Euler characteristic is " + std::to_string(chi);
    }
    if (d == 0) {
        if (topology == Topology::ball && complex.count(0) == 1) {
            return std::nullopt;
        }
        return "a 0-dimensional ball is a single point";
    }
    if (!is_pure(complex)) {
        return "manifold-with-boundary tag on a non-pure complex";
    }
    if (!ridges_at_most_two(complex)) {
        return "some ridge lies in more than two facets";
    }
    if (is_pseudomanifold(complex)) {
        return "tag requires a nonempty boundary, but every ridge is in two facets";
    }
    return std::nullopt;
}

} // namespace detail

/// Why the topology tag contradicts the complex, or nothing if the cheap
/// consequences of the tag hold.
inline std::optional<std::string> topology_inconsistency(const GeneratedComplex& g)
{
    if (g.is_cubical()) {
        return detail::check_tag(g.cubical(), g.topology);
    }
    return detail::check_tag(g.simplicial(), g.topology);
}

} // namespace cubical
