#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace memgrid::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, const std::string& where,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw std::invalid_argument("config: unknown key '" + where + key + "'");
        }
    }
}

double get_number(const ordered_json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        throw std::invalid_argument(std::string("config: '") + key + "' must be a number");
    }
    return v.get<double>();
}

int get_int(const ordered_json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw std::invalid_argument(std::string("config: '") + key + "' must be an integer");
    }
    return v.get<int>();
}

bool get_bool(const ordered_json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) {
        throw std::invalid_argument(std::string("config: '") + key + "' must be a boolean");
    }
    return v.get<bool>();
}

std::string get_string(const ordered_json& obj, const char* key, std::string fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_string()) {
        throw std::invalid_argument(std::string("config: '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

std::vector<double> get_vector(const ordered_json& obj, const char* key,
                               std::vector<double> fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_array() || v.empty()) {
        throw std::invalid_argument(std::string("config: '") + key +
                                    "' must be a nonempty array of numbers");
    }
    std::vector<double> out;
    for (const auto& item : v) {
        if (!item.is_number()) {
            throw std::invalid_argument(std::string("config: '") + key +
                                        "' must contain only numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
    for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = lo * std::exp(ratio * k);
    return out;
}

SweepConfig default_sweep() {
    SweepConfig sweep;
    // 20 flux magnitudes across both signs, 10 values 0.01 .. 2.
    for (double m : log_spaced(0.01, 2.0, 10)) {
        sweep.phi.push_back(-m);
        sweep.phi.push_back(m);
    }
    sweep.n_b = {0.05, 0.275, 0.5, 0.725, 0.95};
    sweep.f0 = log_spaced(1.0, 100.0, 5);
    sweep.p = {0.05, 0.15, 0.5, 0.9};
    sweep.alpha = {0.05, 0.15, 0.3, 0.5, 0.9};
    // 20 * 5 * 5 * 4 * 5 = 10^4 points.
    return sweep;
}

DeviceParams parse_device(const ordered_json& obj, DeviceParams base) {
    reject_unknown_keys(obj, "device.",
                        {"a", "f0", "p", "alpha", "d", "rho1", "rho2", "eps_geom", "area"});
    base.a = get_number(obj, "a", base.a);
    base.f0 = get_number(obj, "f0", base.f0);
    base.p = get_number(obj, "p", base.p);
    base.alpha = get_number(obj, "alpha", base.alpha);
    base.d = get_number(obj, "d", base.d);
    base.rho1 = get_number(obj, "rho1", base.rho1);
    base.rho2 = get_number(obj, "rho2", base.rho2);
    base.eps_geom = get_number(obj, "eps_geom", base.eps_geom);
    base.area = get_number(obj, "area", base.area);
    return base;
}

DriveSignal parse_drive(const ordered_json& obj, DriveSignal base) {
    reject_unknown_keys(obj, "drive.", {"waveform", "amplitude", "frequency", "phase"});
    const std::string waveform = get_string(
        obj, "waveform", base.waveform == Waveform::Sine ? "sine" : "triangle");
    if (waveform == "sine") {
        base.waveform = Waveform::Sine;
    } else if (waveform == "triangle") {
        base.waveform = Waveform::Triangle;
    } else {
        throw std::invalid_argument("config: drive.waveform must be 'sine' or 'triangle'");
    }
    base.amplitude = get_number(obj, "amplitude", base.amplitude);
    base.frequency = get_number(obj, "frequency", base.frequency);
    base.phase = get_number(obj, "phase", base.phase);
    return base;
}

SimConfig parse_sim(const ordered_json& obj, SimConfig base) {
    reject_unknown_keys(obj, "sim.",
                        {"dt", "cycles", "coupling", "mobility", "n_b0", "kappa", "phi0",
                         "phi_initial", "window"});
    base.dt = get_number(obj, "dt", base.dt);
    base.cycles = get_int(obj, "cycles", base.cycles);
    const std::string coupling = get_string(
        obj, "coupling", base.coupling == Coupling::FluxDriven ? "flux_driven" : "current_driven");
    if (coupling == "flux_driven") {
        base.coupling = Coupling::FluxDriven;
    } else if (coupling == "current_driven") {
        base.coupling = Coupling::CurrentDriven;
    } else {
        throw std::invalid_argument(
            "config: sim.coupling must be 'flux_driven' or 'current_driven'");
    }
    base.mobility = get_number(obj, "mobility", base.mobility);
    base.n_b0 = get_number(obj, "n_b0", base.n_b0);
    base.kappa = get_number(obj, "kappa", base.kappa);
    base.phi0 = get_number(obj, "phi0", base.phi0);
    if (obj.contains("phi_initial")) {
        base.phi_initial = get_number(obj, "phi_initial", base.phi_initial);
        base.center_flux = false;
    }
    if (obj.contains("window")) {
        const auto& w = obj.at("window");
        if (!w.is_object()) throw std::invalid_argument("config: sim.window must be an object");
        reject_unknown_keys(w, "sim.window.", {"s", "g", "n_e", "sigma"});
        base.window.s = get_number(w, "s", base.window.s);
        base.window.g = get_number(w, "g", base.window.g);
        base.window.n_e = get_number(w, "n_e", base.window.n_e);
        base.window.sigma = get_number(w, "sigma", base.window.sigma);
    }
    return base;
}

DecomposeConfig parse_decompose(const ordered_json& obj, DecomposeConfig base) {
    reject_unknown_keys(obj, "decompose.",
                        {"phi_min", "phi_max", "count", "include_flux_limit"});
    base.phi_min = get_number(obj, "phi_min", base.phi_min);
    base.phi_max = get_number(obj, "phi_max", base.phi_max);
    base.count = get_int(obj, "count", base.count);
    base.include_flux_limit = get_bool(obj, "include_flux_limit", base.include_flux_limit);
    if (base.count < 2) throw std::invalid_argument("config: decompose.count must be >= 2");
    if (!(base.phi_max > base.phi_min)) {
        throw std::invalid_argument("config: decompose.phi_max must exceed phi_min");
    }
    return base;
}

SweepConfig parse_sweep(const ordered_json& obj, SweepConfig base) {
    reject_unknown_keys(obj, "sweep.", {"phi", "n_b", "f0", "p", "alpha"});
    base.phi = get_vector(obj, "phi", base.phi);
    base.n_b = get_vector(obj, "n_b", base.n_b);
    base.f0 = get_vector(obj, "f0", base.f0);
    base.p = get_vector(obj, "p", base.p);
    base.alpha = get_vector(obj, "alpha", base.alpha);
    for (double phi : base.phi) {
        if (phi == 0.0) {
            throw std::invalid_argument("config: sweep.phi must exclude 0 (use decompose "
                                        "include_flux_limit for the analytic limit)");
        }
    }
    for (double n_b : base.n_b) {
        if (!(n_b >= 0.0 && n_b <= 1.0)) {
            throw std::invalid_argument("config: sweep.n_b values must lie in [0,1]");
        }
    }
    return base;
}

OutputConfig parse_output(const ordered_json& obj, OutputConfig base) {
    reject_unknown_keys(obj, "output.", {"dir", "format", "svg"});
    base.dir = get_string(obj, "dir", base.dir);
    base.format = get_string(obj, "format", base.format);
    base.svg = get_bool(obj, "svg", base.svg);
    if (base.format != "csv" && base.format != "json") {
        throw std::invalid_argument("config: output.format must be 'csv' or 'json'");
    }
    return base;
}

}  // namespace

RunConfig default_config() {
    RunConfig cfg;
    cfg.sweep = default_sweep();
    return cfg;
}

RunConfig parse_config(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("config: expected a JSON object");
    reject_unknown_keys(root, "", {"device", "drive", "sim", "decompose", "sweep", "output"});

    RunConfig cfg = default_config();
    if (root.contains("device")) cfg.device = parse_device(root.at("device"), cfg.device);
    if (root.contains("drive")) cfg.drive = parse_drive(root.at("drive"), cfg.drive);
    if (root.contains("sim")) cfg.sim = parse_sim(root.at("sim"), cfg.sim);
    if (root.contains("decompose")) {
        cfg.decompose = parse_decompose(root.at("decompose"), cfg.decompose);
    }
    if (root.contains("sweep")) cfg.sweep = parse_sweep(root.at("sweep"), cfg.sweep);
    if (root.contains("output")) cfg.output = parse_output(root.at("output"), cfg.output);

    cfg.device.validate();
    cfg.sim.validate(cfg.drive);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace memgrid::cli
