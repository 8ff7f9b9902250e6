#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubical/classify.hpp"
#include "cubical/cubical_complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/simplicial_complex.hpp"
#include "cubical/topology.hpp"

namespace cubical {

/**
 * Text format, one directive per line, '#' starts a comment:
 *
 *     format_version 1
 *     kind cubical            (or simplicial)
 *     dim 2
 *     topology torus          (optional, default none)
 *     polytopal false         (optional)
 *     provenance torus(4,4)   (optional, rest of the line)
 *     cell 2 0 1 4 5          (cubical: dimension k, then 2^k corners in bit order)
 *     facet 0 1 2             (simplicial: vertex list)
 */
inline constexpr std::string_view format_version = "1";

namespace detail {

struct Token
{
    std::string_view text;
    std::size_t column = 0; ///< 1-based
};

inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i >= line.size() || line[i] == '#') {
            break;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline std::size_t parse_count(const Token& t, std::size_t line)
{
    std::size_t value = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a nonnegative integer, got '" + std::string(t.text) + "'", line, t.column);
    }
    return value;
}

inline std::string_view rest_of_line(std::string_view line, const Token& from)
{
    std::string_view rest = line.substr(from.column - 1);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ' || rest.back() == '\t')) {
        rest.remove_suffix(1);
    }
    return rest;
}

} // namespace detail

/// Reads a complex file. Malformed text raises ParseError; a well-formed file
/// describing something that is not a valid complex, or whose metadata
/// contradicts it, raises ValidationFailed.
inline GeneratedComplex parse_complex(std::istream& in)
{
    std::optional<std::string> version;
    std::optional<bool> cubical_kind;
    std::optional<int> declared_dim;
    std::optional<std::size_t> dim_line;
    Topology topology = Topology::none;
    bool polytopal = false;
    std::string provenance;
    std::vector<CubicalCell> cells;
    std::vector<Simplex> facets;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = detail::tokenize(raw);
        if (tokens.empty()) {
            continue;
        }
        const std::string_view key = tokens[0].text;
        auto expect_args = [&](std::size_t n) {
            if (tokens.size() != n + 1) {
                const std::size_t col = tokens.size() > n + 1 ? tokens[n + 1].column : raw.size() + 1;
                throw ParseError("'" + std::string(key) + "' takes " + std::to_string(n) + " argument(s)", line_no,
                                 col);
            }
        };
        if (!version && key != "format_version") {
            throw ParseError("file must start with 'format_version'", line_no, tokens[0].column);
        }
        if (key == "format_version") {
            expect_args(1);
            if (version) {
                throw ParseError("repeated format_version", line_no, tokens[0].column);
            }
            if (tokens[1].text != format_version) {
                throw ParseError("unsupported format_version '" + std::string(tokens[1].text) + "'", line_no,
                                 tokens[1].column);
            }
            version = std::string(tokens[1].text);
        } else if (key == "kind") {
            expect_args(1);
            if (tokens[1].text != "cubical" && tokens[1].text != "simplicial") {
                throw ParseError("kind must be 'cubical' or 'simplicial'", line_no, tokens[1].column);
            }
            if (cubical_kind) {
                throw ParseError("repeated kind", line_no, tokens[0].column);
            }
            cubical_kind = tokens[1].text == "cubical";
        } else if (key == "dim") {
            expect_args(1);
            if (tokens[1].text == "-1") {
                declared_dim = -1;
            } else {
                declared_dim = static_cast<int>(detail::parse_count(tokens[1], line_no));
            }
            dim_line = line_no;
        } else if (key == "topology") {
            expect_args(1);
            const auto t = parse_topology(tokens[1].text);
            if (!t) {
                throw ParseError("unknown topology '" + std::string(tokens[1].text) + "'", line_no, tokens[1].column);
            }
            topology = *t;
        } else if (key == "polytopal") {
            expect_args(1);
            if (tokens[1].text != "true" && tokens[1].text != "false") {
                throw ParseError("polytopal must be 'true' or 'false'", line_no, tokens[1].column);
            }
            polytopal = tokens[1].text == "true";
        } else if (key == "provenance") {
            provenance = tokens.size() > 1 ? std::string(detail::rest_of_line(raw, tokens[1])) : std::string{};
        } else if (key == "cell") {
            if (!cubical_kind || !*cubical_kind) {
                throw ParseError("'cell' needs 'kind cubical' first", line_no, tokens[0].column);
            }
            if (tokens.size() < 2) {
                throw ParseError("'cell' needs a dimension", line_no, raw.size() + 1);
            }
            const std::size_t k = detail::parse_count(tokens[1], line_no);
            if (k > 20) {
                throw ParseError("cell dimension above 20", line_no, tokens[1].column);
            }
            const std::size_t expected = std::size_t{1} << k;
            if (tokens.size() - 2 != expected) {
                throw ParseError("a " + std::to_string(k) + "-cell needs " + std::to_string(expected) +
                                     " corners, found " + std::to_string(tokens.size() - 2),
                                 line_no, tokens[1].column);
            }
            std::vector<VertexId> corners;
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                corners.push_back(detail::parse_count(tokens[t], line_no));
            }
            try {
                cells.emplace_back(static_cast<int>(k), std::move(corners));
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no, tokens[0].column);
            }
        } else if (key == "facet") {
            if (!cubical_kind || *cubical_kind) {
                throw ParseError("'facet' needs 'kind simplicial' first", line_no, tokens[0].column);
            }
            Simplex s;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                s.push_back(detail::parse_count(tokens[t], line_no));
            }
            facets.push_back(std::move(s));
        } else {
            throw ParseError("unknown directive '" + std::string(key) + "'", line_no, tokens[0].column);
        }
    }
    if (!version) {
        throw ParseError("empty file", line_no + 1, 1);
    }
    if (!cubical_kind) {
        throw ParseError("missing 'kind'", line_no + 1, 1);
    }
    if (!declared_dim) {
        throw ParseError("missing 'dim'", line_no + 1, 1);
    }

    GeneratedComplex g;
    g.topology = topology;
    g.polytopal = polytopal;
    g.provenance = provenance;
    try {
        if (*cubical_kind) {
            if (cells.empty()) {
                throw ValidationFailed("a cubical complex file needs at least one cell");
            }
            g.complex = build_cubical(cells);
        } else {
            g.complex = facets.empty() ? SimplicialComplex{} : build_simplicial(facets);
        }
    } catch (const ValidationError& e) {
        std::string witness;
        for (std::size_t v : e.witness()) {
            witness += (witness.empty() ? "" : ",") + std::to_string(v);
        }
        throw ValidationFailed(std::string(e.what()) + (witness.empty() ? "" : " (witness {" + witness + "})"));
    } catch (const InvalidArgument& e) {
        throw ValidationFailed(e.what());
    }
    if (g.dim() != *declared_dim) {
        throw ValidationFailed("declared dim " + std::to_string(*declared_dim) + " on line " +
                               std::to_string(*dim_line) + " but the cells span dimension " + std::to_string(g.dim()));
    }
    if (auto why = topology_inconsistency(g)) {
        throw ValidationFailed("topology " + to_string(topology) + ": " + *why);
    }
    return g;
}

inline GeneratedComplex parse_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    return parse_complex(in);
}

/// Writes the maximal faces with their corner orderings, in the order the complex stores them.
inline void serialize_complex(const GeneratedComplex& g, std::ostream& out)
{
    out << "format_version " << format_version << "\n";
    out << "kind " << (g.is_cubical() ? "cubical" : "simplicial") << "\n";
    out << "dim " << g.dim() << "\n";
    out << "topology " << to_string(g.topology) << "\n";
    out << "polytopal " << (g.polytopal ? "true" : "false") << "\n";
    if (!g.provenance.empty()) {
        out << "provenance " << g.provenance << "\n";
    }
    if (g.is_cubical()) {
        for (const CubicalCell& c : g.cubical().facet_cells()) {
            out << "cell " << c.dim;
            for (VertexId v : c.corners) {
                out << ' ' << v;
            }
            out << "\n";
        }
    } else {
        for (const Simplex& s : g.simplicial().facets()) {
            out << "facet";
            for (VertexId v : s) {
                out << ' ' << v;
            }
            out << "\n";
        }
    }
}

inline std::string serialize_complex(const GeneratedComplex& g)
{
    std::ostringstream out;
    serialize_complex(g, out);
    return out.str();
}

inline void write_complex_file(const GeneratedComplex& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgument("cannot write '" + path + "'");
    }
    serialize_complex(g, out);
}

} // namespace cubical
