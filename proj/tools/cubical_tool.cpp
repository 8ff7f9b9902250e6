#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubical/cli.hpp"

int main(int argc, char** argv)
{
    namespace cli = cubical::cli;
    CLI::App app{"Build, measure, and check cubical and simplicial complexes"};
    app.require_subcommand(1);

    std::string family;
    std::vector<std::string> params;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "write a complex from a named family");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--output", out_path, "output file (standard output if omitted)");
    gen->footer([] {
        std::string s = "families:\n";
        for (const auto& [name, args] : cli::families()) {
            s += "  " + name + " " + args + "\n";
        }
        return s;
    }());

    std::string invariant;
    std::string path;
    bool machine = false;
    auto* compute = app.add_subcommand("compute", "print an invariant of a complex file");
    compute->add_option("invariant", invariant, "f, euler, h, g, hsc, hc, gc, or links")->required();
    compute->add_option("path", path, "complex file")->required();
    compute->add_flag("--machine", machine, "emit JSON");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite on a complex file");
    verify->add_option("suite", suite, "adin-ds, lbt, face-bounds, eq3, glbc, thm42, ns-ds, or all")->required();
    verify->add_option("path", path, "complex file")->required();
    verify->add_flag("--machine", machine, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_error;
    }

    if (gen->parsed()) {
        return cli::cmd_gen(family, params, out_path, std::cout, std::cerr);
    }
    if (compute->parsed()) {
        return cli::cmd_compute(invariant, path, machine, std::cout, std::cerr);
    }
    return cli::cmd_verify(suite, path, machine, std::cout, std::cerr);
}
