#include "memgrid/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "memgrid/errors.hpp"

namespace memgrid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this |phi| the decomposition switches to the analytic limit; the
// closed form's 1/phi poles would otherwise amplify rounding.
constexpr double kFluxEpsilon = 1e-9;

}  // namespace

// ============================================================================
// Drive
// ============================================================================

double DriveSignal::value(double t) const {
    const double cycles_in = frequency * t + phase / kTwoPi;
    switch (waveform) {
        case Waveform::Sine:
            return amplitude * std::sin(kTwoPi * cycles_in);
        case Waveform::Triangle: {
            double u = cycles_in - std::floor(cycles_in);
            if (u < 0.25) return amplitude * 4.0 * u;
            if (u < 0.75) return amplitude * (2.0 - 4.0 * u);
            return amplitude * (4.0 * u - 4.0);
        }
    }
    throw std::invalid_argument("DriveSignal: unknown waveform");
}

void DriveSignal::validate() const {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
        throw std::invalid_argument("DriveSignal: amplitude must be >= 0");
    }
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw std::invalid_argument("DriveSignal: frequency must be > 0");
    }
    if (!std::isfinite(phase)) throw std::invalid_argument("DriveSignal: non-finite phase");
}

// ============================================================================
// Configuration
// ============================================================================

std::size_t SimConfig::steps_per_cycle(const DriveSignal& drive) const {
    const double exact = 1.0 / (drive.frequency * dt);
    return static_cast<std::size_t>(std::llround(exact));
}

void SimConfig::validate(const DriveSignal& drive) const {
    drive.validate();
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("SimConfig: dt must be > 0");
    }
    if (cycles < 1) throw std::invalid_argument("SimConfig: cycles must be >= 1");
    const double exact = 1.0 / (drive.frequency * dt);
    if (exact < 200.0) {
        throw std::invalid_argument("SimConfig: dt must resolve >= 200 steps per period");
    }
    if (std::abs(exact - std::llround(exact)) > 1e-6) {
        throw std::invalid_argument("SimConfig: dt must divide the drive period");
    }
    if (!std::isfinite(mobility) || !std::isfinite(kappa) || !std::isfinite(phi0) ||
        !std::isfinite(phi_initial)) {
        throw std::invalid_argument("SimConfig: non-finite parameter");
    }
    if (!(n_b0 >= 0.0 && n_b0 <= 1.0)) {
        throw std::invalid_argument("SimConfig: n_b0 outside [0,1]");
    }
}

double SimConfig::initial_flux(const DriveSignal& drive) const {
    if (!center_flux) return phi_initial;
    // Center the flux swing about zero: integrate one period from 0 with the
    // run's own step and offset by minus the midpoint of the observed range.
    const std::size_t spc = steps_per_cycle(drive);
    double phi = 0.0, lo = 0.0, hi = 0.0;
    double v_prev = drive.value(0.0);
    for (std::size_t k = 1; k <= spc; ++k) {
        const double v_now = drive.value(static_cast<double>(k) * dt);
        phi += 0.5 * (v_prev + v_now) * dt;
        v_prev = v_now;
        lo = std::min(lo, phi);
        hi = std::max(hi, phi);
    }
    return -0.5 * (lo + hi);
}

// ============================================================================
// Flux integration
// ============================================================================

std::vector<double> integrate_flux(std::span<const double> v, double dt,
                                   double phi_initial) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_flux: dt must be > 0");
    std::vector<double> phi(v.size());
    if (v.empty()) return phi;
    phi[0] = phi_initial;
    for (std::size_t k = 1; k < v.size(); ++k) {
        phi[k] = phi[k - 1] + 0.5 * (v[k - 1] + v[k]) * dt;
    }
    return phi;
}

// ============================================================================
// Run
// ============================================================================

Trace run(const DriveSignal& drive, const DeviceParams& device, const SimConfig& cfg) {
    cfg.validate(drive);
    device.validate();

    const std::size_t spc = cfg.steps_per_cycle(drive);
    const std::size_t n = spc * static_cast<std::size_t>(cfg.cycles) + 1;

    Trace trace;
    trace.steps_per_cycle = spc;
    trace.cycles = cfg.cycles;
    trace.dt = cfg.dt;
    trace.amplitude = drive.amplitude;
    trace.t.resize(n);
    trace.v.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        trace.t[k] = static_cast<double>(k) * cfg.dt;
        trace.v[k] = drive.value(trace.t[k]);
    }
    trace.phi = integrate_flux(trace.v, cfg.dt, cfg.initial_flux(drive));
    trace.i.resize(n);
    trace.n_b.resize(n);
    trace.r.resize(n);
    trace.z1.resize(n);
    trace.z2.resize(n);
    trace.p1.resize(n);
    trace.p2.resize(n);

    double n_b = cfg.n_b0;
    double i_prev = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double t = trace.t[k];
        const double v = trace.v[k];

        if (cfg.coupling == Coupling::FluxDriven) {
            n_b = boundary_from_flux(trace.phi[k], cfg.kappa, cfg.phi0);
            const Decomposition dec =
                (std::abs(trace.phi[k]) < kFluxEpsilon)
                    ? small_flux_limit(n_b, device)
                    : decompose(FluxState{trace.phi[k], n_b}, device);
            trace.z1[k] = dec.z1;
            trace.z2[k] = dec.z2;
            trace.r[k] = dec.composite.re;
        } else {
            if (k > 0) {
                n_b = advance_boundary(BoundaryState{n_b, trace.t[k - 1]}, i_prev,
                                       cfg.dt, cfg.mobility, cfg.window)
                          .n_b;
            }
            const double r1 = device.rho1 * n_b;
            const double r2 = device.rho2 * (1.0 - n_b);
            trace.z1[k] = ComplexOhms{r1, 0.0};
            trace.z2[k] = ComplexOhms{r2, 0.0};
            trace.r[k] = r1 + r2;
        }

        trace.n_b[k] = n_b;
        if (!(trace.r[k] > 0.0)) {
            throw simulation_integrity_error(
                "run: composite resistance " + std::to_string(trace.r[k]) +
                " <= 0 at t = " + std::to_string(t));
        }
        const double i = v / trace.r[k];
        trace.i[k] = i;
        trace.p1[k] = i * i * trace.z1[k].re;
        trace.p2[k] = i * i * trace.z2[k].re;
        i_prev = i;
    }
    return trace;
}

// ============================================================================
// Audits
// ============================================================================

PinchAudit detect_pinch(const Trace& trace, double tol_abs) {
    if (trace.cycles < 1 || trace.size() < trace.steps_per_cycle + 1) {
        throw std::invalid_argument("detect_pinch: trace spans less than one cycle");
    }
    double i_max = 0.0;
    for (double x : trace.i) i_max = std::max(i_max, std::abs(x));
    if (tol_abs < 0.0) tol_abs = 1e-12 + 1e-9 * i_max;
    const double v_eps = 1e-9 * trace.amplitude;

    PinchAudit audit;
    audit.pinched = true;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        if (std::abs(trace.v[k]) <= v_eps) {
            audit.max_current_at_zero_voltage =
                std::max(audit.max_current_at_zero_voltage, std::abs(trace.i[k]));
            if (std::abs(trace.i[k]) > tol_abs) audit.pinched = false;
        }
    }
    // Between-sample sign changes: interpolate i at the v = 0 crossing. The
    // admissible slack is the linear-interpolation error bound from the local
    // second difference of i.
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
        const double va = trace.v[k], vb = trace.v[k + 1];
        if (std::abs(va) <= v_eps || std::abs(vb) <= v_eps) continue;
        if ((va < 0.0) == (vb < 0.0)) continue;
        const double w = -va / (vb - va);
        const double i_cross = trace.i[k] + w * (trace.i[k + 1] - trace.i[k]);
        double slack = 0.0;
        if (k > 0 && k + 2 < trace.size()) {
            const double d2a = trace.i[k + 1] - 2.0 * trace.i[k] + trace.i[k - 1];
            const double d2b = trace.i[k + 2] - 2.0 * trace.i[k + 1] + trace.i[k];
            slack = 0.125 * std::max(std::abs(d2a), std::abs(d2b));
        }
        audit.max_current_at_zero_voltage =
            std::max(audit.max_current_at_zero_voltage, std::abs(i_cross));
        if (std::abs(i_cross) > tol_abs + slack) audit.pinched = false;
    }
    return audit;
}

std::vector<double> loop_areas(const Trace& trace) {
    if (trace.steps_per_cycle == 0 || trace.cycles < 1 ||
        trace.size() != trace.steps_per_cycle * static_cast<std::size_t>(trace.cycles) + 1) {
        throw std::invalid_argument("loop_areas: trace does not hold an integer cycle count");
    }
    // A pinched curve is a figure-eight: the plain signed shoelace over a full
    // cycle cancels between the two origin-crossing lobes, so each lobe is
    // accumulated in its own orientation (equivalent to the integral of
    // sgn(v) * i dv). Zero for a retraced line, negates under reversed
    // traversal.
    std::vector<double> areas(static_cast<std::size_t>(trace.cycles));
    for (std::size_t c = 0; c < areas.size(); ++c) {
        const std::size_t begin = c * trace.steps_per_cycle;
        double area = 0.0;
        for (std::size_t k = begin; k < begin + trace.steps_per_cycle; ++k) {
            const double lobe_sign = (trace.v[k] + trace.v[k + 1]) < 0.0 ? -1.0 : 1.0;
            area += lobe_sign * 0.5 * (trace.i[k] + trace.i[k + 1]) *
                    (trace.v[k + 1] - trace.v[k]);
        }
        areas[c] = area;
    }
    return areas;
}

double loop_area(const Trace& trace) {
    const std::vector<double> areas = loop_areas(trace);
    double sum = 0.0;
    for (double a : areas) sum += a;
    return sum / static_cast<double>(areas.size());
}

NdrAudit detect_ndr(const Trace& trace) {
    NdrAudit audit;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        if (std::min(trace.z1[k].re, trace.z2[k].re) < 0.0) {
            audit.component_negative_steps.push_back(k);
        }
    }
    double i_max = 0.0;
    for (double x : trace.i) i_max = std::max(i_max, std::abs(x));
    const double di_eps = 1e-12 * std::max(1.0, i_max);

    bool open = false;
    std::size_t start = 0;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
        const double dv = trace.v[k + 1] - trace.v[k];
        const double di = trace.i[k + 1] - trace.i[k];
        const bool ndr = std::abs(di) > di_eps && dv * di < 0.0;
        if (ndr && !open) {
            open = true;
            start = k;
        } else if (!ndr && open) {
            open = false;
            audit.terminal_intervals.emplace_back(start, k);
        }
    }
    if (open) audit.terminal_intervals.emplace_back(start, trace.size() - 1);
    return audit;
}

EnergyAudit energy_audit(const Trace& trace) {
    EnergyAudit audit;
    for (std::size_t k = 0; k < trace.size(); ++k) {
        audit.e1 += trace.p1[k] * trace.dt;
        audit.e2 += trace.p2[k] * trace.dt;
        audit.neg1 += std::min(trace.p1[k], 0.0) * trace.dt;
        audit.neg2 += std::min(trace.p2[k], 0.0) * trace.dt;
    }
    audit.e_total = audit.e1 + audit.e2;
    audit.active_component =
        audit.e1 < 0.0 || audit.e2 < 0.0 || audit.neg1 < 0.0 || audit.neg2 < 0.0;
    return audit;
}

double ideal_memristor_current(double t, double v_const, double phi0) {
    const double flux = phi0 + v_const * t;
    return 3.0 * v_const * flux * flux;
}

}  // namespace memgrid
