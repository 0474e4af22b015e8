// memgrid command-line front end.
//
// Subcommands: simulate | decompose | classify | sweep.
// Exit codes: 0 success, 2 config error, 3 runtime integrity violation,
// 4 sweep invariant failures.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "memgrid/errors.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string out_dir;
    std::string format;
    bool svg = false;
};

memgrid::cli::RunConfig resolve_config(const GlobalOptions& opts) {
    memgrid::cli::RunConfig cfg = opts.config_path.empty()
                                      ? memgrid::cli::default_config()
                                      : memgrid::cli::load_config(opts.config_path);
    if (!opts.out_dir.empty()) cfg.output.dir = opts.out_dir;
    if (!opts.format.empty()) {
        if (opts.format != "csv" && opts.format != "json") {
            throw std::invalid_argument("--format must be csv or json");
        }
        cfg.output.format = opts.format;
    }
    if (opts.svg) cfg.output.svg = true;
    return cfg;
}

void add_global_options(CLI::App* cmd, GlobalOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--format", opts.format, "output format: csv|json");
    cmd->add_flag("--svg", opts.svg, "emit SVG plots");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacancy-transport device simulator, impedance decomposition and "
                 "passive-element classifier"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string candidate;
    bool show_table = false;
    bool show_report = false;
    bool include_flux_limit = false;

    CLI::App* simulate = app.add_subcommand("simulate", "run a time-domain simulation");
    add_global_options(simulate, opts);

    CLI::App* decompose = app.add_subcommand("decompose", "tabulate the impedance split over flux");
    add_global_options(decompose, opts);
    decompose->add_flag("--include-flux-limit", include_flux_limit,
                        "add the analytic phi = 0 row");

    CLI::App* classify = app.add_subcommand("classify", "classify a candidate element");
    add_global_options(classify, opts);
    classify->add_option("candidate", candidate, "built-in name or candidate JSON file");
    classify->add_flag("--table", show_table, "dump the canonical table");
    classify->add_flag("--memristor-report", show_report, "emit the exclusion chain");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate invariants over a parameter grid");
    add_global_options(sweep, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        const memgrid::cli::RunConfig cfg = resolve_config(opts);
        if (simulate->parsed()) return memgrid::cli::cmd_simulate(cfg);
        if (decompose->parsed()) {
            memgrid::cli::RunConfig with_limit = cfg;
            if (include_flux_limit) with_limit.decompose.include_flux_limit = true;
            return memgrid::cli::cmd_decompose(with_limit);
        }
        if (classify->parsed()) {
            return memgrid::cli::cmd_classify(cfg, candidate, show_table, show_report,
                                              cfg.output.format);
        }
        if (sweep->parsed()) return memgrid::cli::cmd_sweep(cfg);
    } catch (const memgrid::simulation_integrity_error& e) {
        std::cerr << "integrity violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
