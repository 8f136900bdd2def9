#include <CLI11.hpp>

#include <iostream>

#include "haargap/cli.hpp"

int main(int argc, char** argv)
{
    using namespace haargap::cli;

    CLI::App app{"Exact entropy bounds and Haar-component linear programs for SL_n"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CliConfig cfg;
    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec commands[] = {
        {"roots", "List the roots of A_{n-1} and the Weyl orbit size of a direction"},
        {"spectrum", "Lyapunov exponents, chi_max and the fast/slow split for K"},
        {"bound", "Entropy lower bound, Haar entropy, conjectured bound, dispersive exponent"},
        {"supports", "Enumerate admissible supports of ergodic components"},
        {"haar-lp", "Solve the entropy-game LP for the minimal Haar weight"},
        {"validate", "Run the Cotlar-Stein and non-stationary phase numerical suite"},
        {"report", "Table of minimal Haar weights against the closed forms"},
    };
    std::optional<std::string> seed_text;
    for (const auto& spec : commands) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--n", cfg.n, "Rank parameter n of SL_n");
        sub->add_option("--direction", cfg.direction, "Trace-zero direction, comma-separated rationals");
        sub->add_option("--beta", cfg.beta, "Entropy fraction as p/q")->capture_default_str();
        sub->add_option("--lattice", cfg.lattice, "generic | inner")->capture_default_str();
        sub->add_option("--bound-mode", cfg.bound_mode, "haar-fraction | thm14")->capture_default_str();
        sub->add_option("--K", cfg.K, "Ehrenfest constant K as p/q (default 1/chi_max)");
        sub->add_option("--format", cfg.format, "json | table")->capture_default_str();
        sub->add_option("--seed", seed_text, "Seed for 'validate' (overrides HAARGAP_SEED)");
        sub->add_option("-o,--output", cfg.output, "Also write the output to this file");
        sub->callback([&cfg, name = std::string(spec.name)] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }
    if (seed_text) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(*seed_text, &used);
            if (used != seed_text->size() || seed_text->front() == '-')
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            std::cerr << "error: --seed must be a non-negative integer, got '" << *seed_text << "'\n";
            return kInvalidInput;
        }
    }

    const auto result = run(cfg);
    std::cout << result.output;
    if (!result.error.empty())
        std::cerr << "error: " << result.error << "\n";
    return result.exit_code;
}
