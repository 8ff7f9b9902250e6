#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubical/classify.hpp"
#include "cubical/cubical_complex.hpp"
#include "cubical/enumerative.hpp"
#include "cubical/errors.hpp"
#include "cubical/macaulay.hpp"
#include "cubical/report.hpp"
#include "cubical/topology.hpp"

namespace cubical {

namespace detail {

inline VerificationReport start(std::string check, std::string statement)
{
    VerificationReport r;
    r.check = std::move(check);
    r.statement = std::move(statement);
    return r;
}

/// The claimed topology must not contradict the cheap computable facts.
template <class Complex>
void enforce_claim(const Complex& complex, const Claim& claim, const std::string& check)
{
    if (auto why = check_tag(complex, claim.topology)) {
        throw PreconditionFailed(check + ": input tagged " + to_string(claim.topology) + " but " + *why);
    }
}

/// Sphere-tagged input must be Eulerian; anything else is a broken tag.
inline bool eulerian_or_throw(const CubicalComplex& k, const Claim& claim, const std::string& check)
{
    enforce_claim(k, claim, check);
    const bool eulerian = is_pure(k) && is_eulerian(k);
    if (!eulerian && claim.topology == Topology::sphere) {
        throw PreconditionFailed(check + ": input tagged sphere but it is not Eulerian");
    }
    return eulerian;
}

inline SimplicialHVector link_h(const CubicalComplex& k, VertexId v)
{
    return h_simplicial(f_vector(link_of_vertex(k, v)), k.dim());
}

/// h^sc of a (dim)-complex whose f-vector is given by per-dimension counts.
inline ShortCubicalHVector short_h_of_counts(const std::vector<Int>& f, int d)
{
    std::vector<Int> with_empty{1};
    with_empty.insert(with_empty.end(), f.begin(), f.end());
    return h_short_cubical_from_f(CubicalFVector(static_cast<int>(f.size()) - 1, std::move(with_empty)), d);
}

/// g^sc_j = h^sc_j - h^sc_{j-1} and g^c_j = h^c_j - h^c_{j-1} of the boundary,
/// read as a (d-1)-complex; an empty boundary gives h^sc = 0.
struct BoundaryVectors
{
    ShortCubicalHVector short_h;
    LongCubicalHVector long_h;

    Int g_short(int j) const { return checked::sub(short_h[j], short_h[j - 1]); }
    Int g_long(int j) const { return checked::sub(long_h[j], long_h[j - 1]); }
};

inline BoundaryVectors boundary_vectors(const CubicalComplex& boundary, int d)
{
    auto s = h_short_cubical_from_f(f_vector(boundary), d - 1);
    auto l = h_long_cubical(s);
    return {std::move(s), std::move(l)};
}

} // namespace detail

/// h^c_{d+1-i} - h^c_i = (-1)^i (-2)^d (χ̃(K) - χ̃(S^d)) and h^sc_i = h^sc_{d-i}.
inline VerificationReport verify_cubical_ds(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("cubical-ds", "h^c_{d+1-i} - h^c_i = (-1)^i (-2)^d (chi(K) - chi(S^d)) for 0 <= i <= d+1; "
                                      "h^sc_i = h^sc_{d-i}");
    if (k.dim() < 0) {
        throw InvalidArgument("cubical-ds: empty complex");
    }
    detail::enforce_claim(k, claim, r.check);
    if (!is_pure(k)) {
        return r.inapplicable("complex is not pure");
    }
    if (auto w = semi_eulerian_witness(k)) {
        const std::string where = detail::format_set(k.face(*w).vertices);
        if (is_closed(claim.topology)) {
            throw PreconditionFailed("cubical-ds: input tagged " + to_string(claim.topology) +
                                     " but the link of face " + where + " has the wrong Euler characteristic");
        }
        r.require("semi-Eulerian", false);
        r.witness = "face " + where;
        return r.inapplicable("not semi-Eulerian: link of face " + where);
    }
    r.require("semi-Eulerian", true);
    const int d = k.dim();
    const auto hs = h_short_cubical(k);
    const auto hc = h_long_cubical(hs);
    const Int gap = checked::sub(reduced_euler(k), checked::sign(d));
    const Int scale = checked::mul(checked::sign(d), checked::pow2(d));
    for (int i = 0; i <= d + 1; ++i) {
        r.add("h^c_{d+1-i} - h^c_i = (-1)^i (-2)^d (chi - chi(S^d))", i, checked::sub(hc[d + 1 - i], hc[i]),
              checked::mul(checked::sign(i), checked::mul(scale, gap)));
    }
    for (int i = 0; i <= d; ++i) {
        r.add("h^sc_i = h^sc_{d-i}", i, hs[i], hs[d - i]);
    }
    if (gap == 0) {
        r.note("Eulerian: right-hand side vanishes at every index");
    }
    return r.finish();
}

/**
 * Σ 2^i f_i <= f_0^2, through its refined form Σ_{i>=1} 2^{i-1} f_i <= C(f_0, 2):
 * each antipodal pair of an i-face has that face as least upper bound, and
 * distinct faces give distinct pairs.
 */
inline VerificationReport verify_antipodal_pair_bound(const CubicalComplex& k)
{
    auto r = detail::start("antipodal-pair-bound", "sum_i 2^i f_i <= f_0^2; sum_{i>=1} 2^{i-1} f_i <= C(f_0, 2)");
    if (k.dim() < 1) {
        return r.inapplicable("needs dimension >= 1");
    }
    const int d = k.dim();
    const auto f = f_vector(k);
    Int weighted = 0;
    Int refined = 0;
    for (int i = 0; i <= d; ++i) {
        weighted = checked::add(weighted, checked::mul(checked::pow2(i), f[i]));
        if (i >= 1) {
            refined = checked::add(refined, checked::mul(checked::pow2(i - 1), f[i]));
        }
    }
    r.add("f_0^2 >= sum 2^i f_i", 0, checked::mul(f[0], f[0]), weighted, Relation::at_least);
    r.add("C(f_0,2) >= sum_{i>=1} 2^{i-1} f_i", 0, binomial(f[0], 2), refined, Relation::at_least);

    // every antipodal pair of an i-face F has least upper bound F
    std::vector<Int> lub_hits(static_cast<std::size_t>(d + 1), 0);
    for (FaceId id = 0; id < k.faces().size(); ++id) {
        const Face& face = k.face(id);
        if (face.dim < 1) {
            continue;
        }
        for (auto [a, b] : antipodal_pairs(face)) {
            if (least_upper_bound(k, a, b) == id) {
                ++lub_hits[static_cast<std::size_t>(face.dim)];
            } else if (!r.witness) {
                r.witness = "antipodal pair (" + std::to_string(a) + "," + std::to_string(b) + ") of face " +
                            detail::format_set(face.vertices);
            }
        }
    }
    for (int i = 1; i <= d; ++i) {
        r.add("antipodal pairs with least upper bound F, over i-faces F = 2^{i-1} f_i", i,
              lub_hits[static_cast<std::size_t>(i)], checked::mul(checked::pow2(i - 1), f[i]));
    }
    std::set<std::pair<VertexId, VertexId>> bounded;
    for (FaceId id : k.facets()) {
        const auto& vs = k.face(id).vertices;
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                bounded.emplace(vs[a], vs[b]);
            }
        }
    }
    const auto n_bounded = static_cast<Int>(bounded.size());
    r.add("C(f_0,2) >= pairs with an upper bound", 0, binomial(f[0], 2), n_bounded, Relation::at_least);
    r.add("pairs with an upper bound >= sum_{i>=1} 2^{i-1} f_i", 0, n_bounded, refined, Relation::at_least);
    if (weighted == checked::mul(f[0], f[0])) {
        r.note("equality in f_0^2 >= sum 2^i f_i");
    }
    return r.finish();
}

/// 2^i f_i = Σ_v f_{i-1}(lk v) for 1 <= i <= d, and h^sc from vertex links equals h^sc from f.
inline VerificationReport verify_link_sums(const CubicalComplex& k)
{
    auto r = detail::start("link-sums", "2^i f_i = sum_v f_{i-1}(lk v); h^sc(K) = sum_v h(lk v)");
    if (k.dim() < 0) {
        throw InvalidArgument("link-sums: empty complex");
    }
    const int d = k.dim();
    const auto f = f_vector(k);
    std::vector<Int> pairs(static_cast<std::size_t>(d + 1), 0);
    std::vector<Int> link_total(static_cast<std::size_t>(d + 1), 0);
    for (VertexId v : k.vertices()) {
        const auto lf = f_vector(link_of_vertex(k, v));
        for (int i = 1; i <= d; ++i) {
            pairs[static_cast<std::size_t>(i)] = checked::add(pairs[static_cast<std::size_t>(i)], lf[i - 1]);
        }
        const auto lh = h_simplicial(lf, d);
        for (int j = 0; j <= d; ++j) {
            link_total[static_cast<std::size_t>(j)] = checked::add(link_total[static_cast<std::size_t>(j)], lh[j]);
        }
    }
    for (int i = 1; i <= d; ++i) {
        r.add("2^i f_i = sum_v f_{i-1}(lk v)", i, checked::mul(checked::pow2(i), f[i]),
              pairs[static_cast<std::size_t>(i)]);
    }
    const auto hs = h_short_cubical_from_f(f);
    for (int j = 0; j <= d; ++j) {
        r.add("h^sc_j from f = sum_v h_j(lk v)", j, hs[j], link_total[static_cast<std::size_t>(j)]);
    }
    return r.finish();
}

/// f_0 >= 2^{d+1} for cubical pseudomanifolds with d >= 2, with the steps of its proof.
inline VerificationReport verify_vertex_lower_bound(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("vertex-lower-bound", "f_0 >= 2^{d+1} for a cubical pseudomanifold of dimension d >= 2");
    detail::enforce_claim(k, claim, r.check);
    const int d = k.dim();
    if (d < 2) {
        return r.inapplicable("needs dimension >= 2");
    }
    if (!is_pure(k) || !is_pseudomanifold(k)) {
        r.require("pseudomanifold", false);
        return r.inapplicable("not a pseudomanifold");
    }
    r.require("pseudomanifold", true);
    const auto f = f_vector(k);
    const auto hc = h_long_cubical(k);
    const Int bound = checked::pow2(d + 1);
    r.add("f_0 >= 2^{d+1}", 0, f[0], bound, Relation::at_least);
    r.add("h^c_1 >= h^c_0", 1, hc[1], hc[0], Relation::at_least);

    Int weighted = 0;
    for (int i = 0; i <= d; ++i) {
        weighted = checked::add(weighted, checked::mul(checked::pow2(i), f[i]));
    }
    std::vector<Int> pairs(static_cast<std::size_t>(d + 1), 0);
    Int min_facets = -1;
    Int off_minimum = 0;
    for (VertexId v : k.vertices()) {
        const auto lf = f_vector(link_of_vertex(k, v));
        for (int i = 1; i <= d; ++i) {
            pairs[static_cast<std::size_t>(i)] = checked::add(pairs[static_cast<std::size_t>(i)], lf[i - 1]);
        }
        const Int facets_here = lf[d - 1];
        min_facets = min_facets < 0 ? facets_here : std::min(min_facets, facets_here);
        off_minimum += facets_here != d + 1;
    }
    for (int i = 1; i <= d; ++i) {
        r.add("2^i f_i = sum_v f_{i-1}(lk v)", i, checked::mul(checked::pow2(i), f[i]),
              pairs[static_cast<std::size_t>(i)]);
    }
    r.add("min over vertices of facets containing v >= d+1", 0, min_facets, d + 1, Relation::at_least);
    const Int eq2_rhs = checked::mul(f[0], bound - 1);
    r.add("sum 2^i f_i >= f_0 (2^{d+1} - 1)", 0, weighted, eq2_rhs, Relation::at_least);
    if (weighted == eq2_rhs) {
        r.add("equality forces every vertex into exactly d+1 facets", 0, off_minimum, 0);
    }
    if (off_minimum == 0) {
        r.add("every vertex in d+1 facets: (d+1) f_0 mod 2^d", 0, checked::mul(d + 1, f[0]) % checked::pow2(d), 0);
    }
    r.note("slack f_0 - 2^{d+1} = " + std::to_string(f[0] - bound));
    if (f[0] == bound) {
        r.note("equality: f_0 = 2^{d+1}");
    }
    return r.finish();
}

/// f_i >= C(d+1, i) 2^{d+1-i} for pseudomanifolds, with the per-link bound f_{i-1}(lk v) >= C(d+1, i).
inline VerificationReport verify_face_lower_bounds(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("face-lower-bounds", "f_i >= C(d+1,i) 2^{d+1-i} for 0 <= i <= d; f_{i-1}(lk v) >= C(d+1,i)");
    detail::enforce_claim(k, claim, r.check);
    const int d = k.dim();
    if (d < 2) {
        return r.inapplicable("needs dimension >= 2");
    }
    if (!is_pure(k) || !is_pseudomanifold(k)) {
        r.require("pseudomanifold", false);
        return r.inapplicable("not a pseudomanifold");
    }
    r.require("pseudomanifold", true);
    const auto f = f_vector(k);
    std::vector<Int> least(static_cast<std::size_t>(d + 1), -1);
    for (VertexId v : k.vertices()) {
        const auto lf = f_vector(link_of_vertex(k, v));
        for (int i = 0; i <= d; ++i) {
            auto& m = least[static_cast<std::size_t>(i)];
            m = m < 0 ? lf[i - 1] : std::min(m, lf[i - 1]);
        }
    }
    std::vector<int> tight;
    for (int i = 0; i <= d; ++i) {
        const Int bound = checked::mul(binomial(d + 1, i), checked::pow2(d + 1 - i));
        r.add("f_i >= C(d+1,i) 2^{d+1-i}", i, f[i], bound, Relation::at_least);
        r.add("min_v f_{i-1}(lk v) >= C(d+1,i)", i, least[static_cast<std::size_t>(i)], binomial(d + 1, i),
              Relation::at_least);
        if (f[i] == bound) {
            tight.push_back(i);
        }
    }
    if (!tight.empty()) {
        std::string s = "equality at i =";
        for (int i : tight) {
            s += " " + std::to_string(i);
        }
        r.note(s);
    }
    return r.finish();
}

/// h^c_{i+1} - h^c_{i-1} = h^sc_i - h^sc_{i-1}, the closed form of h^c, and its first and last entries.
inline VerificationReport verify_long_short_relation(const CubicalComplex& k)
{
    auto r = detail::start("long-short-relation", "h^c_{i+1} - h^c_{i-1} = h^sc_i - h^sc_{i-1}; "
                                  "h^c_{i+1} = (-1)^{i+1} h^c_0 + sum_{j<=i} (-1)^{i-j} h^sc_j");
    if (k.dim() < 0) {
        throw InvalidArgument("long-short-relation: empty complex");
    }
    const int d = k.dim();
    const auto f = f_vector(k);
    const auto hs = h_short_cubical_from_f(f);
    const auto hc = h_long_cubical(hs);
    const auto closed = h_long_cubical_closed_form(hs);
    for (int i = 1; i <= d; ++i) {
        r.add("h^c_{i+1} - h^c_{i-1} = h^sc_i - h^sc_{i-1}", i, checked::sub(hc[i + 1], hc[i - 1]),
              checked::sub(hs[i], hs[i - 1]));
    }
    for (int i = 0; i <= d; ++i) {
        r.add("h^c_{i+1} recurrence = closed form", i + 1, hc[i + 1], closed[i + 1]);
    }
    r.add("h^c_1 = f_0 - 2^d", 1, hc[1], checked::sub(f[0], checked::pow2(d)));
    r.add("h^c_{d+1} = (-2)^d chi(K)", d + 1, hc[d + 1],
          checked::mul(checked::mul(checked::sign(d), checked::pow2(d)), reduced_euler(f)));
    Int total = 0;
    for (int j = 0; j <= d; ++j) {
        total = checked::add(total, hs[j]);
    }
    r.add("sum_j h^sc_j = 2^d f_d", d, total, checked::mul(checked::pow2(d), f[d]));
    return r.finish();
}

/// Even d with every vertex link having h_1 = ... = h_{d-1}: h^c_1 = ... = h^c_d.
inline VerificationReport verify_stacked_link_plateau(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("stacked-link-plateau", "d = 2k Eulerian, links with h_1 = ... = h_{d-1}: h^c_1 = ... = h^c_d");
    const int d = k.dim();
    if (d < 2 || d % 2 != 0) {
        return r.inapplicable("needs even dimension >= 2");
    }
    const bool eulerian = detail::eulerian_or_throw(k, claim, r.check);
    r.require("Eulerian", eulerian);
    if (!eulerian) {
        return r.inapplicable("not Eulerian");
    }
    for (VertexId v : k.vertices()) {
        const auto h = detail::link_h(k, v);
        for (int i = 2; i <= d - 1; ++i) {
            if (h[i] != h[1]) {
                r.require("vertex links have h_1 = ... = h_{d-1}", false);
                r.witness = "vertex " + std::to_string(v);
                return r.inapplicable("link of vertex " + std::to_string(v) + " has h_" + std::to_string(i) +
                                      " != h_1");
            }
        }
    }
    r.require("vertex links have h_1 = ... = h_{d-1}", true);
    const auto hc = h_long_cubical(k);
    for (int i = 2; i <= d; ++i) {
        r.add("h^c_i = h^c_1", i, hc[i], hc[1]);
    }
    return r.finish();
}

/// Cubical 4-spheres: g^c_2 >= 0, via h^c_2 - h^c_1 = h^sc_2 - h^sc_1 = Σ_v (h_2 - h_1)(lk v).
inline VerificationReport verify_four_sphere_g2(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("four-sphere-g2", "4-dimensional cubical sphere: g^c_2 >= 0");
    if (claim.topology != Topology::sphere || k.dim() != 4) {
        return r.inapplicable("needs a 4-dimensional complex tagged sphere");
    }
    r.require("Eulerian", detail::eulerian_or_throw(k, claim, r.check));
    const auto hs = h_short_cubical(k);
    const auto hc = h_long_cubical(hs);
    Int link_sum = 0;
    Int least = 0;
    bool first = true;
    for (VertexId v : k.vertices()) {
        const auto h = detail::link_h(k, v);
        const Int g2 = checked::sub(h[2], h[1]);
        link_sum = checked::add(link_sum, g2);
        least = first ? g2 : std::min(least, g2);
        first = false;
    }
    r.add("h^c_3 = h^c_2", 3, hc[3], hc[2]);
    r.add("h^c_2 - h^c_1 = h^sc_2 - h^sc_1", 2, checked::sub(hc[2], hc[1]), checked::sub(hs[2], hs[1]));
    r.add("h^sc_2 - h^sc_1 = sum_v (h_2 - h_1)(lk v)", 2, checked::sub(hs[2], hs[1]), link_sum);
    r.add("min_v (h_2 - h_1)(lk v) >= 0", 2, least, 0, Relation::at_least);
    r.add("g^c_2 >= 0", 2, checked::sub(hc[2], hc[1]), 0, Relation::at_least);
    return r.finish();
}

/// Boundary of a cubical (2k+1)-polytope: g^c_k >= 0.
inline VerificationReport verify_polytope_middle_g(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("polytope-middle-g", "boundary of a cubical (2k+1)-polytope: g^c_k >= 0");
    const int d = k.dim();
    if (d < 2 || d % 2 != 0) {
        return r.inapplicable("needs even dimension >= 2");
    }
    if (claim.topology != Topology::sphere || !claim.polytopal) {
        return r.inapplicable("needs a complex flagged as a polytope boundary");
    }
    r.require("Eulerian", detail::eulerian_or_throw(k, claim, r.check));
    const int half = d / 2;
    const auto hs = h_short_cubical(k);
    const auto hc = h_long_cubical(hs);
    Int broken_links = 0;
    for (VertexId v : k.vertices()) {
        const auto g = g_vector(detail::link_h(k, v), half);
        broken_links += !is_m_vector(g.entries()).ok;
    }
    r.add("vertex links failing the M-vector condition", 0, broken_links, 0);
    r.add("h^c_{k+1} = h^c_k", half + 1, hc[half + 1], hc[half]);
    r.add("h^c_{k+1} - h^c_{k-1} = h^sc_k - h^sc_{k-1}", half, checked::sub(hc[half + 1], hc[half - 1]),
          checked::sub(hs[half], hs[half - 1]));
    r.add("h^sc_k >= h^sc_{k-1}", half, hs[half], hs[half - 1], Relation::at_least);
    r.add("g^c_k >= 0", half, checked::sub(hc[half], hc[half - 1]), 0, Relation::at_least);
    return r.finish();
}

/// d = 2k sphere: h^c_i - h^c_{i-1} = Σ_{j=i}^k (-1)^{j-i} g^sc_j for 1 <= i <= k.
inline VerificationReport verify_alternating_g_sum(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("alternating-g-sum", "h^c_i - h^c_{i-1} = sum_{j=i}^k (-1)^{j-i} g^sc_j for 1 <= i <= k");
    const int d = k.dim();
    if (claim.topology != Topology::sphere || d < 2 || d % 2 != 0) {
        return r.inapplicable("needs an even-dimensional complex tagged sphere");
    }
    r.require("Eulerian", detail::eulerian_or_throw(k, claim, r.check));
    const int half = d / 2;
    const auto hs = h_short_cubical(k);
    const auto hc = h_long_cubical(hs);
    for (int i = 1; i <= half; ++i) {
        Int rhs = 0;
        for (int j = i; j <= half; ++j) {
            rhs = checked::add(rhs, checked::sign(j - i) * checked::sub(hs[j], hs[j - 1]));
        }
        r.add("h^c_i - h^c_{i-1} = sum (-1)^{j-i} g^sc_j", i, checked::sub(hc[i], hc[i - 1]), rhs);
    }
    return r.finish();
}

namespace detail {

/// Monotone chain h^c_0 <= ... <= h^c_k.
inline void add_glbc_chain(VerificationReport& r, const LongCubicalHVector& hc, int half)
{
    for (int i = 1; i <= half; ++i) {
        r.add("h^c_i >= h^c_{i-1}", i, hc[i], hc[i - 1], Relation::at_least);
    }
}

inline void note_polytopality(VerificationReport& r, const Claim& claim)
{
    r.note(claim.polytopal ? "input flagged as a polytope boundary"
                           : "input not flagged as a polytope boundary: only the computable premise and "
                             "conclusion are checked");
}

} // namespace detail

/// d = 2k, g_2(lk v) <= 2 at every vertex: h^c_0 <= ... <= h^c_k.
inline VerificationReport verify_small_link_glbc(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("small-link-glbc", "d = 2k and g_2(lk v) <= 2 for all v: h^c_0 <= h^c_1 <= ... <= h^c_k");
    const int d = k.dim();
    if (claim.topology != Topology::sphere || d < 2 || d % 2 != 0) {
        return r.inapplicable("needs an even-dimensional complex tagged sphere");
    }
    r.require("Eulerian", detail::eulerian_or_throw(k, claim, r.check));
    const int half = d / 2;
    Int worst_g2 = 0;
    std::vector<std::vector<Int>> link_g;
    for (VertexId v : k.vertices()) {
        const auto h = detail::link_h(k, v);
        std::vector<Int> g{1};
        for (int i = 1; i <= half; ++i) {
            g.push_back(checked::sub(h[i], h[i - 1]));
        }
        if (half >= 2 && g[2] > 2) {
            r.require("g_2(lk v) <= 2 for all v", false);
            r.witness = "vertex " + std::to_string(v);
            return r.inapplicable("g_2 of the link of vertex " + std::to_string(v) + " is " + std::to_string(g[2]));
        }
        if (half >= 2) {
            worst_g2 = std::max(worst_g2, g[2]);
        }
        link_g.push_back(std::move(g));
    }
    r.require("g_2(lk v) <= 2 for all v", true);
    detail::note_polytopality(r, claim);
    if (half < 2) {
        r.note("k = 1: the premise is vacuous");
    }
    // the proof's cascade, per vertex: M-vector, then 0 <= g_k <= ... <= g_2 <= 2
    Int not_m = 0;
    std::vector<Int> rises(static_cast<std::size_t>(half + 1), 0);
    std::vector<Int> over_two(static_cast<std::size_t>(half + 1), 0);
    std::vector<Int> negative(static_cast<std::size_t>(half + 1), 0);
    for (const auto& g : link_g) {
        not_m += !is_m_vector(g).ok;
        for (int i = 2; i <= half; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            over_two[ui] += g[ui] > 2;
            negative[ui] += g[ui] < 0;
            if (i >= 3) {
                rises[ui] += g[ui] > g[ui - 1];
            }
        }
    }
    r.add("vertex links failing the M-vector condition", 0, not_m, 0);
    for (int i = 2; i <= half; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        r.add("links with g_i(lk v) > 2", i, over_two[ui], 0);
        r.add("links with g_i(lk v) < 0", i, negative[ui], 0);
        if (i >= 3) {
            r.add("links with g_i(lk v) > g_{i-1}(lk v)", i, rises[ui], 0);
        }
    }
    detail::add_glbc_chain(r, h_long_cubical(k), half);
    return r.finish();
}

/// d = 2k sphere whose vertex links have 2k+1 or 2k+2 vertices: h^c_0 <= ... <= h^c_k.
inline VerificationReport verify_few_link_vertices_glbc(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("few-link-vertices-glbc", "d = 2k and f_0(lk v) in {2k+1, 2k+2} for all v: "
                                               "h^c_0 <= h^c_1 <= ... <= h^c_k");
    const int d = k.dim();
    if (claim.topology != Topology::sphere || d < 2 || d % 2 != 0) {
        return r.inapplicable("needs an even-dimensional complex tagged sphere");
    }
    r.require("Eulerian", detail::eulerian_or_throw(k, claim, r.check));
    Int worst_g1 = 0;
    for (VertexId v : k.vertices()) {
        const auto lk = link_of_vertex(k, v);
        const Int n = lk.count(0);
        if (n != d + 1 && n != d + 2) {
            r.require("f_0(lk v) in {2k+1, 2k+2} for all v", false);
            r.witness = "vertex " + std::to_string(v);
            return r.inapplicable("link of vertex " + std::to_string(v) + " has " + std::to_string(n) + " vertices");
        }
        const auto h = h_simplicial(f_vector(lk), d);
        worst_g1 = std::max(worst_g1, checked::sub(h[1], h[0]));
    }
    r.require("f_0(lk v) in {2k+1, 2k+2} for all v", true);
    detail::note_polytopality(r, claim);
    r.add("1 >= max_v g_1(lk v)", 1, 1, worst_g1, Relation::at_least);
    detail::add_glbc_chain(r, h_long_cubical(k), d / 2);
    return r.finish();
}

/**
 * Simplicial manifolds with boundary, D = dim + 1:
 * h_{D-i} - h_i = C(D,i) (-1)^{D-i-1} χ̃ - g_i(∂Δ) for 0 <= i <= D.
 *
 * h(∂Δ) is taken with parameter D - 1 and h_{-1} = 0. A closed input is
 * inapplicable unless allow_closed is set; it then runs with ∂Δ = {∅}.
 */
inline VerificationReport verify_simplicial_boundary_ds(const SimplicialComplex& complex, const Claim& claim = {},
                                       bool allow_closed = false)
{
    auto r = detail::start("simplicial-boundary-ds", "h_{D-i} - h_i = C(D,i) (-1)^{D-i-1} chi - g_i(boundary) for 0 <= i <= D");
    if (claim.topology == Topology::none) {
        return r.inapplicable("needs a complex tagged as a manifold");
    }
    detail::enforce_claim(complex, claim, r.check);
    const int dd = complex.dim() + 1;
    if (dd < 1) {
        throw InvalidArgument("simplicial-boundary-ds: empty complex");
    }
    const bool closed = is_closed(claim.topology);
    if (closed && !allow_closed) {
        return r.inapplicable("empty boundary: the closed case is covered by the closed relations");
    }
    const SimplicialComplex boundary = dd >= 2 ? boundary_complex(complex) : SimplicialComplex{};
    if (has_boundary(claim.topology) && boundary.dim() < 0 && dd >= 2) {
        throw PreconditionFailed("simplicial-boundary-ds: input tagged " + to_string(claim.topology) + " but its boundary is empty");
    }
    r.require("boundary " + std::string(boundary.dim() < 0 ? "empty" : "nonempty"), true);
    const auto h = h_simplicial(f_vector(complex));
    const auto hb = h_simplicial(f_vector(boundary), dd - 1);
    const Int chi = reduced_euler(f_vector(complex));
    for (int i = 0; i <= dd; ++i) {
        const Int g = checked::sub(hb[i], hb[i - 1]);
        r.add("h_{D-i} - h_i = C(D,i)(-1)^{D-i-1} chi - g_i(boundary)", i, checked::sub(h[dd - i], h[i]),
              checked::sub(checked::mul(binomial(dd, i), checked::mul(checked::sign(dd - i - 1), chi)), g));
    }
    if (closed) {
        r.note("empty boundary read as {empty face}, so g_i = (-1)^i C(D,i)");
    }
    return r.finish();
}

/**
 * Σ_j h^sc_j λ^{d-j} = Σ_{F ≠ ∅} (-1)^{d - dim F - 1} χ̃(lk F) (2λ)^{dim F} (1-λ)^{d - dim F},
 * compared coefficient by coefficient. Holds for every cubical complex.
 */
inline VerificationReport verify_link_weighted_expansion(const CubicalComplex& k)
{
    auto r = detail::start("link-weighted-expansion", "sum_j h^sc_j x^{d-j} = sum_F (-1)^{d-dim F-1} chi(lk F) (2x)^{dim F} "
                                        "(1-x)^{d-dim F}");
    if (k.dim() < 0) {
        throw InvalidArgument("link-weighted-expansion: empty complex");
    }
    const int d = k.dim();
    std::vector<Int> weight(static_cast<std::size_t>(d + 1), 0);
    for (FaceId f = 0; f < k.faces().size(); ++f) {
        const int i = k.face(f).dim;
        const Int w = checked::mul(checked::sign(d - i - 1), link_reduced_euler(k, f));
        weight[static_cast<std::size_t>(i)] = checked::add(weight[static_cast<std::size_t>(i)], w);
    }
    // weights go negative on non-pure complexes, so expand directly
    const auto hs = h_short_cubical(k);
    for (int m = 0; m <= d; ++m) {
        Int rhs = 0;
        for (int i = 0; i <= m; ++i) {
            const Int term = checked::mul(checked::mul(weight[static_cast<std::size_t>(i)], checked::pow2(i)),
                                          binomial(d - i, m - i));
            rhs = checked::add(rhs, checked::mul(checked::sign(m - i), term));
        }
        r.add("coefficient of x^m: h^sc_{d-m} = link-weighted face sum", m, hs[d - m], rhs);
    }
    return r.finish();
}

/**
 * Cubical manifolds with boundary:
 * h^c_{d+1-j} - h^c_j = (-1)^j (-2)^d χ̃(K) - g^c_j(∂K) for 1 <= j <= d,
 * with the interior-face expansion of h^sc and the relation
 * h^sc_{d-j} = h^sc_j - g^sc_j(∂K) used in its proof.
 *
 * ∂K is read as a (d-1)-complex with h^c_0(∂K) = 2^{d-1}. A closed input is
 * inapplicable unless allow_closed is set; with an empty boundary, h^sc(∂K) = 0.
 */
inline VerificationReport verify_cubical_boundary_ds(const CubicalComplex& k, const Claim& claim = {},
                                            bool allow_closed = false)
{
    auto r = detail::start("cubical-boundary-ds",
                           "h^c_{d+1-j} - h^c_j = (-1)^j (-2)^d chi(K) - g^c_j(boundary) for 1 <= j <= d");
    const bool closed = is_closed(claim.topology);
    if (!has_boundary(claim.topology) && !(closed && allow_closed)) {
        return r.inapplicable(closed ? "empty boundary" : "needs a complex tagged as a manifold with boundary");
    }
    detail::enforce_claim(k, claim, r.check);
    const int d = k.dim();
    if (d < 1) {
        return r.inapplicable("needs dimension >= 1");
    }
    const CubicalComplex boundary = boundary_complex(k);
    const auto b = detail::boundary_vectors(boundary, d);
    const auto f = f_vector(k);
    const auto hs = h_short_cubical_from_f(f);
    const auto hc = h_long_cubical(hs);
    const Int chi = reduced_euler(f);
    const Int scaled = checked::mul(checked::mul(checked::sign(d), checked::pow2(d)), chi);
    r.require("boundary " + std::string(boundary.dim() < 0 ? "empty" : "nonempty"), true);

    for (int j = 1; j <= d; ++j) {
        r.add("h^c_{d+1-j} - h^c_j = (-1)^j (-2)^d chi - g^c_j(boundary)", j, checked::sub(hc[d + 1 - j], hc[j]),
              checked::sub(checked::mul(checked::sign(j), scaled), b.g_long(j)));
    }
    // inductive step: D_j = -D_{j-1} + h^sc_{d-j+1} - h^sc_{j-1}, D_j = h^c_{d+1-j} - h^c_j
    for (int j = 1; j <= d; ++j) {
        const Int prev = checked::sub(hc[d + 2 - j], hc[j - 1]);
        r.add("D_j = -D_{j-1} + h^sc_{d+1-j} - h^sc_{j-1}", j, checked::sub(hc[d + 1 - j], hc[j]),
              checked::add(-prev, checked::sub(hs[d + 1 - j], hs[j - 1])));
    }
    // interior faces
    std::vector<Int> interior(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        interior[static_cast<std::size_t>(i)] = checked::sub(f[i], boundary.count(i));
    }
    const auto inner = detail::short_h_of_counts(interior, d);
    for (int m = 0; m <= d; ++m) {
        r.add("coefficient of x^m: h^sc_{d-m} = interior-face sum", m, hs[d - m], inner[m]);
    }
    for (int j = 0; j <= d; ++j) {
        r.add("h^sc_{d-j} = h^sc_j - g^sc_j(boundary)", j, hs[d - j], checked::sub(hs[j], b.g_short(j)));
    }
    if (closed) {
        r.note("empty boundary: g^c_j(boundary) = (-1)^j 2^d, which recovers the closed relations");
    }
    return r.finish();
}

/// Cubical balls: h^c_{d+1-i} - h^c_i = -g^c_i(∂K) for 1 <= i <= d.
inline VerificationReport verify_ball_ds(const CubicalComplex& k, const Claim& claim = {})
{
    auto r = detail::start("ball-ds", "cubical ball: h^c_{d+1-i} - h^c_i = -g^c_i(boundary) for 1 <= i <= d");
    if (claim.topology != Topology::ball) {
        return r.inapplicable("needs a complex tagged ball");
    }
    detail::enforce_claim(k, claim, r.check);
    const int d = k.dim();
    if (d < 1) {
        return r.inapplicable("needs dimension >= 1");
    }
    const auto b = detail::boundary_vectors(boundary_complex(k), d);
    const auto hc = h_long_cubical(k);
    r.add("chi(K) = 0", 0, reduced_euler(k), 0);
    for (int i = 1; i <= d; ++i) {
        r.add("h^c_{d+1-i} - h^c_i = -g^c_i(boundary)", i, checked::sub(hc[d + 1 - i], hc[i]), -b.g_long(i));
    }
    return r.finish();
}

/// Necessary numeric g-theorem conditions on a simplicial complex flagged as a polytope boundary.
inline VerificationReport verify_g_theorem(const SimplicialComplex& complex, const Claim& claim = {})
{
    if (claim.topology != Topology::sphere || !claim.polytopal) {
        auto r = detail::start("g-theorem-conditions", "h-vector of a simplicial polytope");
        return r.inapplicable("needs a complex flagged as a polytope boundary");
    }
    detail::enforce_claim(complex, claim, "g-theorem-conditions");
    return check_g_theorem_conditions(h_simplicial(f_vector(complex)));
}

/// Names accepted by run_suite.
inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"adin-ds", "lbt", "face-bounds", "eq3",
                                                "glbc",    "thm42", "ns-ds",     "all"};
    return names;
}

/**
 * Runs a named group of checks. Cubical suites on a simplicial complex (and
 * the reverse) throw KindMismatch; "all" runs whatever fits the kind.
 */
inline std::vector<VerificationReport> run_suite(const std::string& suite, const GeneratedComplex& g)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw InvalidArgument("unknown suite '" + suite + "'");
    }
    const Claim claim = g.claim();
    std::vector<VerificationReport> out;
    const bool all = suite == "all";
    if (!g.is_cubical()) {
        const auto& s = g.simplicial();
        if (suite == "ns-ds" || all) {
            out.push_back(verify_simplicial_boundary_ds(s, claim));
        }
        if (suite == "glbc" || all) {
            out.push_back(verify_g_theorem(s, claim));
        }
        if (out.empty()) {
            throw KindMismatch("suite '" + suite + "' needs a cubical complex");
        }
        return out;
    }
    const auto& k = g.cubical();
    if (suite == "ns-ds") {
        throw KindMismatch("suite 'ns-ds' needs a simplicial complex");
    }
    if (suite == "adin-ds" || all) {
        out.push_back(verify_cubical_ds(k, claim));
    }
    if (suite == "lbt" || all) {
        out.push_back(verify_antipodal_pair_bound(k));
        out.push_back(verify_vertex_lower_bound(k, claim));
    }
    if (suite == "face-bounds" || all) {
        out.push_back(verify_face_lower_bounds(k, claim));
    }
    if (suite == "eq3" || all) {
        out.push_back(verify_long_short_relation(k));
        out.push_back(verify_link_sums(k));
        out.push_back(verify_link_weighted_expansion(k));
    }
    if (suite == "glbc" || all) {
        out.push_back(verify_stacked_link_plateau(k, claim));
        out.push_back(verify_four_sphere_g2(k, claim));
        out.push_back(verify_polytope_middle_g(k, claim));
        out.push_back(verify_alternating_g_sum(k, claim));
        out.push_back(verify_small_link_glbc(k, claim));
        out.push_back(verify_few_link_vertices_glbc(k, claim));
    }
    if (suite == "thm42" || all) {
        out.push_back(verify_cubical_boundary_ds(k, claim));
        out.push_back(verify_ball_ds(k, claim));
    }
    return out;
}

/// 0 if something passed and nothing failed, 1 on any failure, 3 if every check was inapplicable.
inline int suite_exit_code(const std::vector<VerificationReport>& reports)
{
    bool any_pass = false;
    for (const auto& r : reports) {
        if (r.status == Status::fail) {
            return 1;
        }
        any_pass = any_pass || r.status == Status::pass;
    }
    return any_pass ? 0 : 3;
}

} // namespace cubical
