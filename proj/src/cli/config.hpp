#ifndef MEMGRID_CLI_CONFIG_HPP
#define MEMGRID_CLI_CONFIG_HPP

/// Run configuration: a JSON config file merged with command-line overrides.
/// Every key is validated before any computation; unknown keys are rejected.

#include <filesystem>
#include <string>
#include <vector>

#include "memgrid/device_model.hpp"
#include "memgrid/simulator.hpp"

namespace memgrid::cli {

struct DecomposeConfig {
    double phi_min = -2.0;
    double phi_max = 2.0;
    int count = 201;                 ///< sweep points; phi = 0 is skipped
    bool include_flux_limit = false; ///< add a phi = 0 row via the analytic limit
};

/// Parameter grid for the invariant sweep. The defaults span one decade
/// around the default parameters inside the supported (0,1) regime of p and
/// alpha, 10^4 points in total.
struct SweepConfig {
    std::vector<double> phi;
    std::vector<double> n_b;
    std::vector<double> f0;
    std::vector<double> p;
    std::vector<double> alpha;
};

struct OutputConfig {
    std::string dir = "out";
    std::string format = "csv";  ///< csv | json
    bool svg = false;
};

struct RunConfig {
    DeviceParams device;
    DriveSignal drive;
    SimConfig sim;
    DecomposeConfig decompose;
    SweepConfig sweep;
    OutputConfig output;
};

/// Defaults used when no config file is given.
RunConfig default_config();

/// Parses and validates a config file. Throws std::invalid_argument with a
/// descriptive message on malformed JSON, unknown keys, or invalid values.
RunConfig load_config(const std::filesystem::path& path);

/// Parses a config from a JSON string (used by load_config and tests).
RunConfig parse_config(const std::string& json_text);

}  // namespace memgrid::cli

#endif  // MEMGRID_CLI_CONFIG_HPP
