#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubical/enumerative.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "cubical/io.hpp"
#include "cubical/verify.hpp"

namespace cubical::cli {

/// Stable process exit codes.
enum ExitCode : int
{
    exit_ok = 0,
    exit_check_failed = 1,
    exit_error = 2,
    exit_all_inapplicable = 3
};

namespace detail {

inline int to_int(const std::string& s)
{
    int value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidArgument("expected an integer parameter, got '" + s + "'");
    }
    return value;
}

inline std::vector<int> to_ints(const std::vector<std::string>& params)
{
    std::vector<int> out;
    for (const auto& p : params) {
        out.push_back(to_int(p));
    }
    return out;
}

inline void expect_count(const std::string& family, const std::vector<std::string>& params, std::size_t lo,
                         std::size_t hi)
{
    if (params.size() < lo || params.size() > hi) {
        throw InvalidArgument("family '" + family + "' takes " +
                              (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                              " parameter(s)");
    }
}

inline void expect_some(const std::string& family, const std::vector<std::string>& params)
{
    if (params.empty()) {
        throw InvalidArgument("family '" + family + "' needs at least one parameter");
    }
}

} // namespace detail

/// Families understood by `gen`, with their parameter summary.
inline const std::map<std::string, std::string>& families()
{
    static const std::map<std::string, std::string> f{
        {"cube-boundary", "n"},
        {"solid-cube", "n"},
        {"pile", "a_1 ... a_n"},
        {"pile-boundary", "a_1 ... a_n"},
        {"torus", "n_1 ... n_d"},
        {"stacked-cubical-ball", "cells dim"},
        {"stacked-cubical-sphere", "cells dim"},
        {"branching-cubical-ball", "cells dim"},
        {"branching-cubical-sphere", "cells dim"},
        {"simplex", "d"},
        {"simplex-boundary", "d"},
        {"cross-polytope-boundary", "d"},
        {"stacked-ball", "d facets [seed: tree gluing]"},
        {"stacked-sphere", "d facets [seed: tree gluing]"},
        {"prism", "<family> <params...>"},
    };
    return f;
}

/// Builds the named family. Throws InvalidArgument on unknown families or bad parameters.
inline GeneratedComplex generate(const std::string& family, const std::vector<std::string>& params)
{
    if (family == "prism") {
        detail::expect_some(family, params);
        const std::vector<std::string> rest(params.begin() + 1, params.end());
        return prism(generate(params[0], rest));
    }
    if (!families().contains(family)) {
        throw InvalidArgument("unknown family '" + family + "'");
    }
    if (family == "pile" || family == "pile-boundary" || family == "torus") {
        detail::expect_some(family, params);
        const auto sides = detail::to_ints(params);
        if (family == "pile") {
            return pile_of_cubes(sides);
        }
        return family == "torus" ? cubical_torus(sides) : pile_boundary(sides);
    }
    if (family.starts_with("stacked-cubical") || family.starts_with("branching-cubical")) {
        detail::expect_count(family, params, 2, 2);
        const auto stacking = family.starts_with("branching") ? Stacking::branching : Stacking::linear;
        auto s = stacked_cubical(detail::to_int(params[0]), detail::to_int(params[1]), stacking);
        return family.ends_with("ball") ? std::move(s.ball) : std::move(s.sphere);
    }
    if (family == "stacked-ball" || family == "stacked-sphere") {
        detail::expect_count(family, params, 2, 3);
        const int d = detail::to_int(params[0]);
        const int n = detail::to_int(params[1]);
        const Gluing gluing = params.size() == 3 ? Gluing::tree : Gluing::linear;
        const auto seed = params.size() == 3 ? static_cast<std::uint64_t>(detail::to_int(params[2])) : 1;
        return family == "stacked-ball" ? stacked_simplicial_ball(d, n, gluing, seed)
                                        : stacked_sphere(d, n, gluing, seed);
    }
    detail::expect_count(family, params, 1, 1);
    const int n = detail::to_int(params[0]);
    if (family == "cube-boundary") {
        return cube_boundary(n);
    }
    if (family == "solid-cube") {
        return solid_cube(n);
    }
    if (family == "simplex") {
        return simplex(n);
    }
    if (family == "simplex-boundary") {
        return simplex_boundary(n);
    }
    return cross_polytope_boundary(n);
}

/// `gen`: writes the family to out_path, or to out when out_path is empty.
inline int cmd_gen(const std::string& family, const std::vector<std::string>& params, const std::string& out_path,
                   std::ostream& out, std::ostream& err)
{
    try {
        const auto g = generate(family, params);
        if (out_path.empty()) {
            serialize_complex(g, out);
        } else {
            write_complex_file(g, out_path);
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

inline const std::vector<std::string>& invariants()
{
    static const std::vector<std::string> names{"f", "euler", "h", "g", "hsc", "hc", "gc", "links"};
    return names;
}

namespace detail {

struct Row
{
    std::string label;
    int index = 0;
    Int value = 0;
};

inline std::vector<Row> rows(const std::string& label, int first, const std::vector<Int>& values)
{
    std::vector<Row> out;
    for (std::size_t t = 0; t < values.size(); ++t) {
        out.push_back({label, first + static_cast<int>(t), values[t]});
    }
    return out;
}

inline void require_cubical(const GeneratedComplex& g, const std::string& invariant)
{
    if (!g.is_cubical()) {
        throw KindMismatch("invariant '" + invariant + "' needs a cubical complex");
    }
}

inline void require_simplicial(const GeneratedComplex& g, const std::string& invariant)
{
    if (g.is_cubical()) {
        throw KindMismatch("invariant '" + invariant + "' needs a simplicial complex");
    }
}

inline void require_nonempty(const GeneratedComplex& g, const std::string& invariant)
{
    if (g.dim() < 0) {
        throw InvalidArgument("invariant '" + invariant + "' is undefined for the empty complex");
    }
}

} // namespace detail

/// `compute`: prints one labeled row per index, or a JSON document with --machine.
inline int cmd_compute(const std::string& invariant, const std::string& path, bool machine, std::ostream& out,
                       std::ostream& err)
{
    try {
        if (std::find(invariants().begin(), invariants().end(), invariant) == invariants().end()) {
            throw InvalidArgument("unknown invariant '" + invariant + "'");
        }
        const auto g = parse_complex_file(path);
        nlohmann::ordered_json doc;
        doc["invariant"] = invariant;
        doc["kind"] = g.is_cubical() ? "cubical" : "simplicial";
        doc["dim"] = g.dim();
        std::vector<detail::Row> table;

        if (invariant == "links") {
            detail::require_cubical(g, invariant);
            detail::require_nonempty(g, invariant);
            const auto& k = g.cubical();
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (VertexId v : k.vertices()) {
                const auto lf = f_vector(link_of_vertex(k, v));
                const auto lh = h_simplicial(lf, k.dim());
                list.push_back({{"vertex", v}, {"f", lf.reported()}, {"h", lh.entries()}});
                if (!machine) {
                    out << "vertex " << v << " f";
                    for (Int x : lf.reported()) {
                        out << ' ' << x;
                    }
                    out << " h";
                    for (Int x : lh.entries()) {
                        out << ' ' << x;
                    }
                    out << "\n";
                }
            }
            if (machine) {
                doc["links"] = list;
                out << doc.dump(2) << "\n";
            }
            return exit_ok;
        }

        if (invariant == "f") {
            if (g.is_cubical()) {
                table = detail::rows("f", 0, f_vector(g.cubical()).reported());
            } else {
                table = detail::rows("f", -1, f_vector(g.simplicial()).reported());
            }
        } else if (invariant == "euler") {
            const Int chi = g.is_cubical() ? reduced_euler(g.cubical()) : reduced_euler(f_vector(g.simplicial()));
            table.push_back({"reduced_euler", 0, chi});
        } else if (invariant == "h" || invariant == "g") {
            detail::require_simplicial(g, invariant);
            const auto h = h_simplicial(f_vector(g.simplicial()));
            if (invariant == "h") {
                table = detail::rows("h", 0, h.entries());
            } else {
                table = detail::rows("g", 0, g_vector(h, standard_g_range(h)).entries());
            }
        } else {
            detail::require_cubical(g, invariant);
            detail::require_nonempty(g, invariant);
            const auto hs = h_short_cubical(g.cubical());
            if (invariant == "hsc") {
                table = detail::rows("hsc", 0, hs.entries());
            } else {
                const auto hc = h_long_cubical(hs);
                if (invariant == "hc") {
                    table = detail::rows("hc", 0, hc.entries());
                } else {
                    table = detail::rows("gc", 0, g_vector(hc, standard_g_range(hc)).entries());
                }
            }
        }

        if (machine) {
            nlohmann::ordered_json entries = nlohmann::ordered_json::array();
            for (const auto& r : table) {
                entries.push_back({{"label", r.label}, {"index", r.index}, {"value", r.value}});
            }
            doc["entries"] = entries;
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& r : table) {
                out << r.label << "_" << r.index << " " << r.value << "\n";
            }
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

inline nlohmann::ordered_json report_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["statement"] = r.statement;
    j["status"] = to_string(r.status);
    nlohmann::ordered_json pre = nlohmann::ordered_json::array();
    for (const auto& [cond, outcome] : r.preconditions) {
        pre.push_back({{"condition", cond}, {"outcome", outcome}});
    }
    j["preconditions"] = pre;
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        recs.push_back({{"identity", rec.identity},
                        {"index", rec.index},
                        {"lhs", rec.lhs},
                        {"rhs", rec.rhs},
                        {"relation", rec.relation == Relation::equal ? "=" : ">="},
                        {"holds", rec.holds()}});
    }
    j["records"] = recs;
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    j["notes"] = r.notes;
    return j;
}

inline void print_report(const VerificationReport& r, std::ostream& out)
{
    out << "check " << r.check << ": " << to_string(r.status) << "\n";
    out << "  statement: " << r.statement << "\n";
    for (const auto& [cond, outcome] : r.preconditions) {
        out << "  precondition " << cond << ": " << outcome << "\n";
    }
    for (const auto& rec : r.records) {
        out << "  [" << (rec.holds() ? "ok" : "FAIL") << "] " << rec.identity << " @" << rec.index << ": " << rec.lhs
            << (rec.relation == Relation::equal ? " = " : " >= ") << rec.rhs << "\n";
    }
    if (r.witness) {
        out << "  witness: " << *r.witness << "\n";
    }
    for (const auto& n : r.notes) {
        out << "  note: " << n << "\n";
    }
}

/// `verify`: 0 if everything applicable passed, 1 on any failure, 3 if nothing applied, 2 on error.
inline int cmd_verify(const std::string& suite, const std::string& path, bool machine, std::ostream& out,
                      std::ostream& err)
{
    try {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
            throw InvalidArgument("unknown suite '" + suite + "'");
        }
        const auto g = parse_complex_file(path);
        const auto reports = run_suite(suite, g);
        const int code = suite_exit_code(reports);
        if (machine) {
            nlohmann::ordered_json doc;
            doc["suite"] = suite;
            doc["provenance"] = g.provenance;
            doc["exit_code"] = code;
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                list.push_back(report_json(r));
            }
            doc["reports"] = list;
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& r : reports) {
                print_report(r, out);
            }
        }
        return code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace cubical::cli
