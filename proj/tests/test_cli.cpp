#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "cubical/cli.hpp"
#include "cubical/cubical.hpp"

using namespace cubical;

namespace {

namespace fs = std::filesystem;

struct TempDir
{
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("cubical_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(Catch::getSeed()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write(const TempDir& dir, const std::string& name, const std::string& text)
{
    const auto p = dir.file(name);
    std::ofstream(p) << text;
    return p;
}

GeneratedComplex parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_complex(in);
}

std::vector<std::vector<std::string>> generator_invocations()
{
    return {{"cube-boundary", "4"},
            {"solid-cube", "3"},
            {"pile", "2", "1", "2"},
            {"pile-boundary", "2", "2", "1"},
            {"torus", "4", "5"},
            {"stacked-cubical-ball", "3", "3"},
            {"stacked-cubical-sphere", "3", "4"},
            {"branching-cubical-ball", "5", "3"},
            {"branching-cubical-sphere", "5", "3"},
            {"simplex", "3"},
            {"simplex-boundary", "4"},
            {"cross-polytope-boundary", "3"},
            {"stacked-ball", "3", "6"},
            {"stacked-ball", "3", "6", "11"},
            {"stacked-sphere", "4", "5", "2"},
            {"prism", "torus", "3", "3"},
            {"prism", "cube-boundary", "3"}};
}

} // namespace

TEST_CASE("serialize then parse reproduces every generator output")
{
    const auto all = generator_invocations();
    for (const auto& inv : all) {
        const std::vector<std::string> params(inv.begin() + 1, inv.end());
        CAPTURE(inv);
        const auto g = cli::generate(inv[0], params);
        const auto back = parse(serialize_complex(g));
        CHECK(back.is_cubical() == g.is_cubical());
        CHECK(back.topology == g.topology);
        CHECK(back.polytopal == g.polytopal);
        CHECK(back.provenance == g.provenance);
        if (g.is_cubical()) {
            CHECK(back.cubical() == g.cubical());
        } else {
            CHECK(back.simplicial() == g.simplicial());
        }
        CHECK(serialize_complex(back) == serialize_complex(g));
    }
}

TEST_CASE("parse errors carry line and column")
{
    const std::string header = "format_version 1\nkind cubical\ndim 1\n";
    SECTION("missing version")
    {
        try {
            parse("kind cubical\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 1);
        }
    }
    SECTION("non-numeric vertex")
    {
        try {
            parse(header + "cell 1 0 x\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
            CHECK(e.column() == 10);
        }
    }
    SECTION("extra argument")
    {
        try {
            parse("format_version 1 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 18);
        }
    }
    CHECK_THROWS_AS(parse("format_version 7\n"), ParseError);
    SECTION("wrong corner count")
    {
        try {
            parse(header + "cell 1 0 1\ncell 2 0 1 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 5);
        }
    }
}

TEST_CASE("parsed files are validated against their declared metadata")
{
    const std::string solid = "format_version 1\nkind cubical\ndim 2\ntopology sphere\ncell 2 0 1 2 3\n";
    CHECK_THROWS_AS(parse(solid), ValidationFailed);
    const std::string wrong_dim = "format_version 1\nkind cubical\ndim 3\ncell 2 0 1 2 3\n";
    CHECK_THROWS_AS(parse(wrong_dim), ValidationFailed);
    const std::string ok = "format_version 1\nkind cubical\ndim 2\ntopology ball\ncell 2 0 1 2 3\n";
    CHECK(parse(ok).cubical().count(0) == 4);
}

TEST_CASE("gen, compute and verify")
{
    TempDir dir;
    std::ostringstream out;
    std::ostringstream err;

    const auto cube = dir.file("c4.cplx");
    REQUIRE(cli::cmd_gen("cube-boundary", {"4"}, cube, out, err) == cli::exit_ok);
    CHECK(cli::cmd_gen("no-such-family", {}, "", out, err) == cli::exit_error);
    CHECK(cli::cmd_gen("torus", {"2", "4"}, "", out, err) == cli::exit_error);

    SECTION("long cubical h of the 4-cube boundary")
    {
        REQUIRE(cli::cmd_compute("hc", cube, false, out, err) == cli::exit_ok);
        CHECK(out.str() == "hc_0 8\nhc_1 8\nhc_2 8\nhc_3 8\nhc_4 8\n");
    }
    SECTION("JSON output")
    {
        REQUIRE(cli::cmd_compute("f", cube, true, out, err) == cli::exit_ok);
        const auto doc = nlohmann::json::parse(out.str());
        CHECK(doc["kind"] == "cubical");
        CHECK(doc["dim"] == 3);
        CHECK(doc["entries"].size() == 4);
        CHECK(doc["entries"][1]["value"] == 32);
    }
    SECTION("kind mismatches are errors")
    {
        const auto s = dir.file("s.cplx");
        REQUIRE(cli::cmd_gen("simplex-boundary", {"3"}, s, out, err) == cli::exit_ok);
        CHECK(cli::cmd_compute("hsc", s, false, out, err) == cli::exit_error);
        CHECK(cli::cmd_compute("h", cube, false, out, err) == cli::exit_error);
        CHECK(cli::cmd_verify("adin-ds", s, false, out, err) == cli::exit_error);
        CHECK(cli::cmd_compute("h", s, false, out, err) == cli::exit_ok);
    }
    SECTION("verify exit codes")
    {
        CHECK(cli::cmd_verify("adin-ds", cube, false, out, err) == cli::exit_ok);
        CHECK(cli::cmd_verify("thm42", cube, false, out, err) == cli::exit_all_inapplicable);
        CHECK(cli::cmd_verify("bogus", cube, false, out, err) == cli::exit_error);
        CHECK(cli::cmd_verify("adin-ds", dir.file("missing.cplx"), false, out, err) == cli::exit_error);
        // two disjoint boundaries of the 4-simplex: same Euler characteristic as a 3-sphere
        std::string text = "format_version 1\nkind simplicial\ndim 3\ntopology sphere\npolytopal true\n";
        for (int base : {0, 5}) {
            for (int skip = 0; skip < 5; ++skip) {
                text += "facet";
                for (int v = 0; v < 5; ++v) {
                    if (v != skip) {
                        text += " " + std::to_string(base + v);
                    }
                }
                text += "\n";
            }
        }
        const auto bad = write(dir, "bad.cplx", text);
        CHECK(cli::cmd_verify("glbc", bad, false, out, err) == cli::exit_check_failed);
    }
    SECTION("verify JSON keeps both sides of every record")
    {
        REQUIRE(cli::cmd_verify("adin-ds", cube, true, out, err) == cli::exit_ok);
        const auto doc = nlohmann::json::parse(out.str());
        CHECK(doc["exit_code"] == 0);
        const auto& rec = doc["reports"][0]["records"][0];
        CHECK(rec.contains("lhs"));
        CHECK(rec.contains("rhs"));
    }
}

#ifdef CUBICAL_TOOL_PATH
TEST_CASE("the executable writes files that the library reads back")
{
    TempDir dir;
    const auto path = dir.file("t.cplx");
    const std::string cmd = std::string(CUBICAL_TOOL_PATH) + " gen torus 4 4 -o " + path;
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(parse_complex_file(path).cubical() == cubical_torus({4, 4}).cubical());
}
#endif
