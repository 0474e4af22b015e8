#ifndef MEMGRID_CLI_COMMANDS_HPP
#define MEMGRID_CLI_COMMANDS_HPP

#include <string>

#include "cli/config.hpp"

namespace memgrid::cli {

/// simulate: writes trace.csv (columns t,v,i,phi,n_b,R,z1_re,z1_im,z2_re,
/// z2_im,p1,p2), audits.json, and optional SVG plots into the output dir.
/// Returns 0; integrity violations propagate as simulation_integrity_error.
int cmd_simulate(const RunConfig& cfg);

/// decompose: writes decomposition.csv (phi,n_b,z1_re,z1_im,z2_re,z2_im,
/// sum_re,sum_im,anomaly) plus a trailing summary comment line, and prints
/// the summary to stdout. Returns 0.
int cmd_decompose(const RunConfig& cfg);

/// classify: verdict for a built-in candidate name or a candidate JSON file;
/// --table dumps the canonical grid, --memristor-report emits the exclusion
/// chain. Prints text (or JSON when format == "json") and writes the JSON
/// artifact into the output dir. Returns 0.
int cmd_classify(const RunConfig& cfg, const std::string& candidate,
                 bool show_table, bool show_report, const std::string& format);

/// sweep: evaluates the decomposition invariants over the configured grid
/// (parallel, MEMGRID_THREADS caps the workers; output order is the grid
/// order). Writes sweep.csv. Returns 0, or 4 when any invariant failed.
int cmd_sweep(const RunConfig& cfg);

}  // namespace memgrid::cli

#endif  // MEMGRID_CLI_COMMANDS_HPP
