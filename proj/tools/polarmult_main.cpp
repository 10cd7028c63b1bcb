#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polarmult/runner.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw polarmult::InputError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarmult: polar and mixed Buchsbaum-Rim multiplicities over kappa[u]_(u), "
                 "with integrality/birationality and reduction criteria"};
    app.require_subcommand(0, 0);

    std::string command;
    app.add_option("command", command, "one of: polar, polar-ideal, relative, check-integral, check-birational, "
                                       "check-reduction-ideal, br, check-reduction-module, sv, selftest")
        ->required();
    std::string input_path;
    app.add_option("--input", input_path, "input document (JSON); '-' or absent reads stdin");
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit the machine-readable report");
    bool no_timings = false;
    app.add_flag("--no-timings", no_timings, "suppress timings for byte-identical reports");
    bool assume_equidim = false;
    app.add_flag("--assume-equidimensional", assume_equidim, "assert that B is equidimensional");
    long long seed = -1;
    app.add_option("--seed", seed, "seed for general-element sampling");
    int vmax = -1, nmax = -1, margin = -1;
    app.add_option("--vmax", vmax, "cap on the internal degree v of any Hilbert window");
    app.add_option("--nmax", nmax, "cap on the m-adic order n of any Hilbert window");
    app.add_option("--margin", margin, "verification margin of the Hilbert windows");
    long long budget = -1;
    app.add_option("--budget", budget, "step budget for completion-style loops");

    CLI11_PARSE(app, argc, argv);

    polarmult::ProblemDescription problem;
    try {
        if (command != "selftest" || !input_path.empty())
            problem = polarmult::problem_from_json(read_input(input_path));
    } catch (const polarmult::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    if (assume_equidim)
        problem.assumptions.equidimensional_B = true;
    if (seed >= 0)
        problem.options.seed = static_cast<std::uint64_t>(seed);
    if (vmax >= 0)
        problem.options.vmax = vmax;
    if (nmax >= 0)
        problem.options.nmax = nmax;
    if (margin >= 0)
        problem.options.margin = margin;
    if (budget >= 0)
        problem.options.budget = static_cast<std::uint64_t>(budget);

    auto result = polarmult::run_command(command, problem, !no_timings);
    if (json_mode)
        std::cout << result.json_report;
    else
        std::cout << result.human;
    return result.exit_code;
}
