#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "json.hpp"

#include "cli/emit.hpp"
#include "memgrid/element_table.hpp"
#include "memgrid/errors.hpp"
#include "memgrid/impedance.hpp"
#include "memgrid/simulator.hpp"

namespace memgrid::cli {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::size_t worker_count() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    n = std::min<std::size_t>(n, 8);
    if (const char* env = std::getenv("MEMGRID_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && parsed > 0) n = std::min<std::size_t>(static_cast<std::size_t>(parsed), 64);
    }
    return std::max<std::size_t>(n, 1);
}

std::vector<std::pair<std::size_t, std::size_t>> to_intervals(
    const std::vector<std::size_t>& steps) {
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (!intervals.empty() && steps[k] == intervals.back().second + 1) {
            intervals.back().second = steps[k];
        } else {
            intervals.emplace_back(steps[k], steps[k]);
        }
    }
    return intervals;
}

ordered_json intervals_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, b] : v) arr.push_back(ordered_json::array({a, b}));
    return arr;
}

}  // namespace

// ============================================================================
// simulate
// ============================================================================

int cmd_simulate(const RunConfig& cfg) {
    const Trace trace = run(cfg.drive, cfg.device, cfg.sim);

    const PinchAudit pinch = detect_pinch(trace);
    const std::vector<double> areas = loop_areas(trace);
    const NdrAudit ndr = detect_ndr(trace);
    const EnergyAudit energy = energy_audit(trace);

    // trace.csv
    std::string csv = "t,v,i,phi,n_b,R,z1_re,z1_im,z2_re,z2_im,p1,p2\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const std::string cells[] = {
            format_double(trace.t[k]),     format_double(trace.v[k]),
            format_double(trace.i[k]),     format_double(trace.phi[k]),
            format_double(trace.n_b[k]),   format_double(trace.r[k]),
            format_double(trace.z1[k].re), format_double(trace.z1[k].im),
            format_double(trace.z2[k].re), format_double(trace.z2[k].im),
            format_double(trace.p1[k]),    format_double(trace.p2[k]),
        };
        csv += csv_row(cells);
    }

    // audits.json
    ordered_json audits;
    audits["pinch"] = {{"pinched", pinch.pinched},
                       {"max_current_at_zero_voltage", pinch.max_current_at_zero_voltage}};
    audits["loop_areas_per_cycle"] = areas;
    audits["loop_area_mean"] = loop_area(trace);
    audits["ndr"] = {
        {"component_negative_intervals", intervals_to_json(to_intervals(ndr.component_negative_steps))},
        {"terminal_ndr_intervals", intervals_to_json(ndr.terminal_intervals)}};
    audits["energy"] = {{"e1", energy.e1},
                        {"e2", energy.e2},
                        {"e_total", energy.e_total},
                        {"neg1", energy.neg1},
                        {"neg2", energy.neg2},
                        {"active_component", energy.active_component}};

    const fs::path out_dir(cfg.output.dir);
    write_file(out_dir / "trace.csv", csv);
    write_file(out_dir / "audits.json", audits.dump(2) + "\n");

    if (cfg.output.svg) {
        // Plotting is best-effort and never affects the exit code.
        try {
            write_file(out_dir / "iv_loop.svg",
                       svg_line_plot(trace.v, trace.i, "i-v loop", "v [V]", "i [A]"));
            std::vector<double> velocity(trace.size(), 0.0);
            for (std::size_t k = 1; k < trace.size(); ++k) {
                velocity[k] = (trace.n_b[k] - trace.n_b[k - 1]) / trace.dt;
            }
            if (!velocity.empty()) velocity[0] = velocity.size() > 1 ? velocity[1] : 0.0;
            write_file(out_dir / "boundary_velocity.svg",
                       svg_line_plot(trace.t, velocity, "boundary velocity", "t [s]",
                                     "dn_b/dt [1/s]"));
            write_file(out_dir / "r_vs_phi.svg",
                       svg_line_plot(trace.phi, trace.r, "composite resistance vs flux",
                                     "phi [V s]", "R [ohm]"));
        } catch (const std::exception& e) {
            std::cerr << "plotting skipped: " << e.what() << "\n";
        }
    }

    std::cout << "simulate: " << trace.size() << " steps, pinched="
              << (pinch.pinched ? "true" : "false")
              << ", loop_area_mean=" << format_double(loop_area(trace))
              << ", active=" << (energy.active_component ? "true" : "false") << "\n";
    return 0;
}

// ============================================================================
// decompose
// ============================================================================

int cmd_decompose(const RunConfig& cfg) {
    struct Point {
        double phi, n_b;
        Decomposition dec;
        bool is_limit;
    };
    std::vector<Point> points;

    const DecomposeConfig& dc = cfg.decompose;
    const double step = (dc.phi_max - dc.phi_min) / static_cast<double>(dc.count - 1);
    // Grid points within epsilon of zero count as the phi = 0 point (the grid
    // midpoint rarely lands on 0.0 exactly); the closed form is replaced by
    // the analytic limit there when requested.
    constexpr double kZeroEps = 1e-9;
    bool limit_emitted = false;
    auto emit_limit = [&]() {
        if (!dc.include_flux_limit || limit_emitted) return;
        const double n_b0 = boundary_from_flux(0.0, cfg.sim.kappa, cfg.sim.phi0);
        points.push_back({0.0, n_b0, small_flux_limit(n_b0, cfg.device), true});
        limit_emitted = true;
    };
    for (int k = 0; k < dc.count; ++k) {
        const double phi = dc.phi_min + step * static_cast<double>(k);
        if (std::abs(phi) < kZeroEps) {
            emit_limit();
            continue;
        }
        if (phi > 0.0) emit_limit();
        const double n_b = boundary_from_flux(phi, cfg.sim.kappa, cfg.sim.phi0);
        points.push_back({phi, n_b, decompose(FluxState{phi, n_b}, cfg.device), false});
    }
    emit_limit();  // all-negative windows still get the requested limit row

    double max_abs_sum_im = 0.0;
    double min_sum_re = std::numeric_limits<double>::infinity();
    std::size_t anomalies = 0;
    for (const Point& pt : points) {
        if (pt.dec.branch_anomaly) {
            ++anomalies;
            continue;
        }
        max_abs_sum_im = std::max(max_abs_sum_im, std::abs(pt.dec.composite.im));
        min_sum_re = std::min(min_sum_re, pt.dec.composite.re);
    }

    std::string csv = "phi,n_b,z1_re,z1_im,z2_re,z2_im,sum_re,sum_im,anomaly\n";
    for (const Point& pt : points) {
        const std::string cells[] = {
            format_double(pt.phi),           format_double(pt.n_b),
            format_double(pt.dec.z1.re),     format_double(pt.dec.z1.im),
            format_double(pt.dec.z2.re),     format_double(pt.dec.z2.im),
            format_double(pt.dec.composite.re), format_double(pt.dec.composite.im),
            pt.dec.branch_anomaly ? std::string("1") : std::string("0"),
        };
        csv += csv_row(cells);
    }
    const std::string summary = "# max_abs_sum_im=" + format_double(max_abs_sum_im) +
                                " min_sum_re=" + format_double(min_sum_re) +
                                " anomalies=" + std::to_string(anomalies) + "\n";
    csv += summary;

    write_file(fs::path(cfg.output.dir) / "decomposition.csv", csv);
    std::cout << summary;
    return 0;
}

// ============================================================================
// classify
// ============================================================================

namespace {

void print_ideal_memristor_demo() {
    std::cout << "ideal memristor under constant drive: i(t) = 3 v (phi0 + v t)^2, "
                 "v = 1 V, phi0 = 0\n";
    std::cout << "  t [s]        i [A]          i(2t)/i(t)\n";
    for (double t : {1.0, 2.0, 5.0, 10.0, 1e2, 1e4, 1e6}) {
        const double i_t = ideal_memristor_current(t, 1.0, 0.0);
        const double ratio = ideal_memristor_current(2.0 * t, 1.0, 0.0) / i_t;
        std::cout << "  " << format_double(t) << "  " << format_double(i_t) << "  "
                  << format_double(ratio) << "\n";
    }
    std::cout << "current grows without bound (square law): a passive one-port cannot "
                 "source this; the element is active.\n";
}

}  // namespace

int cmd_classify(const RunConfig& cfg, const std::string& candidate, bool show_table,
                 bool show_report, const std::string& format) {
    namespace el = memgrid::elements;
    const bool json_out = format == "json";
    const fs::path out_dir(cfg.output.dir);

    if (show_table) {
        const el::Grid grid = el::canonical_table();
        std::cout << (json_out ? el::to_json_string(grid) + "\n" : el::to_text(grid));
        write_file(out_dir / "table.json", el::to_json_string(grid) + "\n");
    }
    if (show_report) {
        const el::MemristorReport report = el::memristor_rejection_report();
        std::cout << (json_out ? el::to_json_string(report) + "\n" : el::to_text(report));
        write_file(out_dir / "memristor_report.json", el::to_json_string(report) + "\n");
    }
    if (candidate.empty()) {
        if (!show_table && !show_report) {
            throw std::invalid_argument(
                "classify: give a candidate name/file, --table, or --memristor-report");
        }
        return 0;
    }

    if (candidate == "ideal-memristor-demo") {
        print_ideal_memristor_demo();
        const el::Verdict verdict = el::classify(*el::builtin_candidate("ideal-memristor"));
        std::cout << (json_out ? el::to_json_string(verdict) + "\n" : el::to_text(verdict));
        write_file(out_dir / "verdict.json", el::to_json_string(verdict) + "\n");
        return 0;
    }

    el::ConstitutiveRelation relation;
    if (auto builtin = el::builtin_candidate(candidate)) {
        relation = *builtin;
    } else if (fs::exists(candidate)) {
        std::ifstream in(candidate, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        relation = el::candidate_from_json(buffer.str());
    } else {
        throw std::invalid_argument("classify: unknown candidate '" + candidate +
                                    "' (not a built-in name or a readable file)");
    }

    const el::Verdict verdict = el::classify(relation);
    std::cout << (json_out ? el::to_json_string(verdict) + "\n" : el::to_text(verdict));
    write_file(out_dir / "verdict.json", el::to_json_string(verdict) + "\n");
    return 0;
}

// ============================================================================
// sweep
// ============================================================================

int cmd_sweep(const RunConfig& cfg) {
    struct Point {
        double phi, n_b, f0, p, alpha;
    };
    struct Result {
        Decomposition dec{};
        enum class Status { Ok, Skipped, Failed } status = Status::Ok;
        std::string detail;
    };

    std::vector<Point> grid;
    grid.reserve(cfg.sweep.phi.size() * cfg.sweep.n_b.size() * cfg.sweep.f0.size() *
                 cfg.sweep.p.size() * cfg.sweep.alpha.size());
    for (double phi : cfg.sweep.phi)
        for (double n_b : cfg.sweep.n_b)
            for (double f0 : cfg.sweep.f0)
                for (double p : cfg.sweep.p)
                    for (double alpha : cfg.sweep.alpha) grid.push_back({phi, n_b, f0, p, alpha});

    std::vector<Result> results(grid.size());
    std::atomic<std::size_t> next{0};

    auto evaluate_point = [&cfg](const Point& pt) -> Result {
        Result res;
        if (pt.p == 1.0) {
            res.status = Result::Status::Skipped;
            res.detail = "precondition: p=1";
            return res;
        }
        DeviceParams dev = cfg.device;
        dev.f0 = pt.f0;
        dev.p = pt.p;
        dev.alpha = pt.alpha;
        try {
            res.dec = decompose(FluxState{pt.phi, pt.n_b}, dev);
        } catch (const singular_branch_error&) {
            res.status = Result::Status::Skipped;
            res.detail = "singular branch";
            return res;
        }
        if (res.dec.branch_anomaly) return res;  // excluded from the invariants
        const double im_tol = 1e-9 * std::max(1.0, std::abs(res.dec.z1.im));
        if (std::abs(res.dec.composite.im) > im_tol) {
            res.status = Result::Status::Failed;
            res.detail = "cancellation";
            return res;
        }
        if (!(res.dec.composite.re > 0.0)) {
            res.status = Result::Status::Failed;
            res.detail = "positivity";
            return res;
        }
        if (res.dec.z1.re * res.dec.z2.re < 0.0) {
            const double pos = std::max(res.dec.z1.re, res.dec.z2.re);
            const double neg = std::min(res.dec.z1.re, res.dec.z2.re);
            if (!(pos > -neg)) {
                res.status = Result::Status::Failed;
                res.detail = "dominance";
            }
        }
        return res;
    };

    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(grid.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= grid.size()) return;
                results[k] = evaluate_point(grid[k]);
            }
        });
    }
    for (std::thread& t : pool) t.join();

    // Single writer, deterministic grid order regardless of execution order.
    std::string csv = "phi,n_b,f0,p,alpha,z1_re,z1_im,z2_re,z2_im,sum_re,sum_im,anomaly,status,detail\n";
    std::size_t failed = 0, skipped = 0, anomalies = 0;
    double max_rel_im = 0.0;
    double min_sum_re = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Point& pt = grid[k];
        const Result& res = results[k];
        const char* status = res.status == Result::Status::Ok
                                 ? "ok"
                                 : (res.status == Result::Status::Skipped ? "skipped" : "failed");
        if (res.status == Result::Status::Failed) ++failed;
        if (res.status == Result::Status::Skipped) ++skipped;
        if (res.status != Result::Status::Skipped && res.dec.branch_anomaly) ++anomalies;
        if (res.status == Result::Status::Ok && !res.dec.branch_anomaly) {
            max_rel_im = std::max(max_rel_im, std::abs(res.dec.composite.im) /
                                                  std::max(1.0, std::abs(res.dec.z1.im)));
            min_sum_re = std::min(min_sum_re, res.dec.composite.re);
        }
        const std::string cells[] = {
            format_double(pt.phi),          format_double(pt.n_b),
            format_double(pt.f0),           format_double(pt.p),
            format_double(pt.alpha),        format_double(res.dec.z1.re),
            format_double(res.dec.z1.im),   format_double(res.dec.z2.re),
            format_double(res.dec.z2.im),   format_double(res.dec.composite.re),
            format_double(res.dec.composite.im),
            res.dec.branch_anomaly ? std::string("1") : std::string("0"),
            std::string(status),            res.detail,
        };
        csv += csv_row(cells);
    }
    const std::string summary =
        "# points=" + std::to_string(grid.size()) + " skipped=" + std::to_string(skipped) +
        " anomalies=" + std::to_string(anomalies) + " failed=" + std::to_string(failed) +
        " max_rel_sum_im=" + format_double(max_rel_im) +
        " min_sum_re=" + format_double(min_sum_re) + "\n";
    csv += summary;

    write_file(fs::path(cfg.output.dir) / "sweep.csv", csv);
    std::cout << summary;
    return failed > 0 ? 4 : 0;
}

}  // namespace memgrid::cli
