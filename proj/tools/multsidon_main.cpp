#include <cstring>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "multsidon/cli.hpp"

using multsidon::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--n", cfg.n, "scale: sets live in {1..n}");
    sub->add_option("--sieve-limit", cfg.sieve_limit, "factor sieve size (default: MULTSIDON_SIEVE_LIMIT or as needed)");
    sub->add_option("--format", format, "json | csv | text");
    sub->add_option("--seed", cfg.seed, "seed for --construction random");
    sub->add_option("--budget", cfg.budget, "node limit for exhaustive searches");
    sub->add_option("--workers", cfg.workers, "worker threads; output does not depend on it");
}

void add_set_input(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--set", cfg.set_file, "newline-delimited integers, '#' comments");
    sub->add_option("--construction", cfg.construction, "base | greedy | exact | random");
    sub->add_option("--random-size", cfg.random_size, "size for --construction random");
}

void add_constants(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--c2", cfg.constants.c2);
    sub->add_option("--c7", cfg.constants.c7);
    sub->add_option("--c8", cfg.constants.c8);
    sub->add_option("--c9", cfg.constants.c9);
    sub->add_option("--c10", cfg.constants.c10);
    sub->add_option("--delta", cfg.constants.delta);
    sub->add_option("--C-delta", cfg.constants.C_delta);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // the config file seeds defaults; flags parsed afterwards override it
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0) {
            try {
                multsidon::apply_config_file(cfg, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
        }
    }
    std::string format = cfg.format == multsidon::OutputFormat::Json  ? "json"
                         : cfg.format == multsidon::OutputFormat::Csv ? "csv"
                                                                      : "text";

    CLI::App app{"Multiplicative 3-Sidon sets: decompositions, hexagon encoding, partition ledger, searches"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value file with defaults for any flag");
    app.fallthrough();

    auto* decompose = app.add_subcommand("decompose", "scan m in [1, n]: constructive and min-v splits");
    add_common(decompose, cfg, format);
    decompose->add_flag("--list", cfg.list, "one csv line per m");

    auto* verify = app.add_subcommand("verify", "k-Sidon and square-product checks for a set");
    add_common(verify, cfg, format);
    add_set_input(verify, cfg);
    verify->add_option("--k", cfg.k, "equation length");

    auto* encode = app.add_subcommand("encode", "set -> graph export and hexagon search");
    add_common(encode, cfg, format);
    add_set_input(encode, cfg);
    encode->add_option("--graph-out", cfg.graph_out, "write 'u v label' lines here");

    auto* ledger = app.add_subcommand("ledger", "edge partition with theoretical caps");
    add_common(ledger, cfg, format);
    add_set_input(ledger, cfg);
    add_constants(ledger, cfg);
    ledger->add_option("--g0-floor", cfg.g0_floor, "assert the G0 cap only from this n on");

    auto* census = app.add_subcommand("census", "Omega distribution counts N_i(x), M_i(x)");
    add_common(census, cfg, format);
    add_constants(census, cfg);
    census->add_option("--x", cfg.x, "range end (default n)");
    census->add_option("--i-min", cfg.i_min);
    census->add_option("--i-max", cfg.i_max);
    census->add_option_function<unsigned>("--i", [&](unsigned i) { cfg.i_min = cfg.i_max = i; }, "single i");

    auto* search = app.add_subcommand("search", "exact / greedy extremal sets");
    add_common(search, cfg, format);
    search->add_flag("--exact", cfg.exact, "branch and bound (default)");
    search->add_flag("--greedy", cfg.greedy, "ascending greedy");
    search->add_option("--objective", cfg.objective, "sidon | square-free");

    auto* extremal = app.add_subcommand("extremal", "brute-force ex(n, C6) and bound tables");
    add_common(extremal, cfg, format);
    extremal->add_option("--max-order", cfg.max_order, "general graphs up to this order (<= 9)");
    extremal->add_option("--max-class", cfg.max_class, "bipartite classes up to this size (<= 5)");

    auto* bounds = app.add_subcommand("bounds", "upper/lower bound shapes over a list of n");
    add_common(bounds, cfg, format);
    bounds->add_option("--ns", cfg.bound_ns, "comma-separated n values (default: --n)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    try {
        cfg.format = multsidon::parse_format(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return multsidon::run(cfg, std::cout, std::cerr);
}
