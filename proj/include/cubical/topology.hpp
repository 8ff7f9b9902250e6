#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cubical/cubical_complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/simplicial_complex.hpp"

namespace cubical {

/// Trusted topology metadata. It is never decided from the complex; verifiers
/// only re-check its cheap computable consequences.
enum class Topology
{
    none,
    sphere,
    ball,
    torus,
    closed_manifold,
    manifold_with_boundary
};

inline std::string to_string(Topology t)
{
    switch (t) {
    case Topology::none: return "none";
    case Topology::sphere: return "sphere";
    case Topology::ball: return "ball";
    case Topology::torus: return "torus";
    case Topology::closed_manifold: return "closed_manifold";
    case Topology::manifold_with_boundary: return "manifold_with_boundary";
    }
    return "none";
}

inline std::optional<Topology> parse_topology(std::string_view s)
{
    for (Topology t : {Topology::none, Topology::sphere, Topology::ball, Topology::torus, Topology::closed_manifold,
                       Topology::manifold_with_boundary}) {
        if (s == to_string(t)) {
            return t;
        }
    }
    return std::nullopt;
}

/// Closed manifolds: spheres, tori, and the generic tag.
constexpr bool is_closed(Topology t)
{
    return t == Topology::sphere || t == Topology::torus || t == Topology::closed_manifold;
}

/// Manifolds with nonempty boundary.
constexpr bool has_boundary(Topology t) { return t == Topology::ball || t == Topology::manifold_with_boundary; }

/// What a verifier may assume about its input beyond the face poset.
struct Claim
{
    Topology topology = Topology::none;
    /// The complex is the boundary complex of a convex polytope.
    bool polytopal = false;
};

/// A complex together with its trusted metadata and where it came from.
struct GeneratedComplex
{
    std::variant<CubicalComplex, SimplicialComplex> complex;
    Topology topology = Topology::none;
    bool polytopal = false;
    std::string provenance;

    bool is_cubical() const { return std::holds_alternative<CubicalComplex>(complex); }

    const CubicalComplex& cubical() const
    {
        if (!is_cubical()) {
            throw KindMismatch(provenance + " is simplicial, a cubical complex was expected");
        }
        return std::get<CubicalComplex>(complex);
    }

    const SimplicialComplex& simplicial() const
    {
        if (is_cubical()) {
            throw KindMismatch(provenance + " is cubical, a simplicial complex was expected");
        }
        return std::get<SimplicialComplex>(complex);
    }

    Claim claim() const { return {topology, polytopal}; }

    int dim() const
    {
        return std::visit([](const auto& k) { return k.dim(); }, complex);
    }
};

} // namespace cubical
