#include "memgrid/device_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace memgrid {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

// ============================================================================
// DeviceParams
// ============================================================================

void DeviceParams::validate() const {
    if (!(finite(a) && finite(f0) && finite(p) && finite(alpha) && finite(d) &&
          finite(rho1) && finite(rho2) && finite(eps_geom) && finite(area))) {
        throw std::invalid_argument("DeviceParams: non-finite parameter");
    }
    if (!(a > 0.0)) throw std::invalid_argument("DeviceParams: a must be > 0");
    if (f0 == 0.0) throw std::invalid_argument("DeviceParams: f0 must be nonzero");
    if (p == 1.0) throw std::invalid_argument("DeviceParams: p must differ from 1");
    // alpha = 1 is allowed: it degenerates the decomposition to a constant
    // resistance and is reported as such by small_flux_limit.
    if (!(d > 0.0)) throw std::invalid_argument("DeviceParams: d must be > 0");
    if (!(rho1 > 0.0 && rho2 > 0.0)) {
        throw std::invalid_argument("DeviceParams: resistivities must be > 0");
    }
    if (!(eps_geom > 0.0)) {
        throw std::invalid_argument("DeviceParams: eps_geom must be > 0");
    }
}

// ============================================================================
// BoundaryTrajectory
// ============================================================================

BoundaryTrajectory BoundaryTrajectory::with_derivative(std::vector<double> times,
                                                       std::vector<double> n_b,
                                                       std::vector<double> n_b_dot) {
    BoundaryTrajectory traj;
    traj.times = std::move(times);
    traj.n_b = std::move(n_b);
    traj.n_b_dot = std::move(n_b_dot);
    traj.validate();
    return traj;
}

BoundaryTrajectory BoundaryTrajectory::from_samples(std::vector<double> times,
                                                    std::vector<double> n_b) {
    if (times.size() != n_b.size() || times.size() < 2) {
        throw std::invalid_argument("BoundaryTrajectory: need >= 2 matching samples");
    }
    std::vector<double> dot(times.size());
    const std::size_t last = times.size() - 1;
    dot[0] = (n_b[1] - n_b[0]) / (times[1] - times[0]);
    dot[last] = (n_b[last] - n_b[last - 1]) / (times[last] - times[last - 1]);
    for (std::size_t k = 1; k < last; ++k) {
        dot[k] = (n_b[k + 1] - n_b[k - 1]) / (times[k + 1] - times[k - 1]);
    }
    return with_derivative(std::move(times), std::move(n_b), std::move(dot));
}

BoundaryTrajectory BoundaryTrajectory::linear(double n_b0, double slope, double t0,
                                              double t1, std::size_t samples) {
    if (samples < 2 || !(t1 > t0)) {
        throw std::invalid_argument("BoundaryTrajectory::linear: bad span");
    }
    std::vector<double> times(samples), pos(samples), dot(samples);
    const double step = (t1 - t0) / static_cast<double>(samples - 1);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = t0 + step * static_cast<double>(k);
        times[k] = t;
        pos[k] = std::clamp(n_b0 + slope * (t - t0), 0.0, 1.0);
        dot[k] = slope;
    }
    return with_derivative(std::move(times), std::move(pos), std::move(dot));
}

void BoundaryTrajectory::validate() const {
    if (times.size() < 2 || n_b.size() != times.size() ||
        n_b_dot.size() != times.size()) {
        throw std::invalid_argument("BoundaryTrajectory: inconsistent column sizes");
    }
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        if (!(times[k + 1] > times[k])) {
            throw std::invalid_argument("BoundaryTrajectory: times must be strictly increasing");
        }
    }
    for (double x : n_b) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument("BoundaryTrajectory: n_b outside [0,1]");
        }
    }
}

namespace {

// Index of the segment containing t; throws when t is outside the span.
std::size_t segment_index(const std::vector<double>& times, double t) {
    if (!std::isfinite(t) || t < times.front() || t > times.back()) {
        throw std::out_of_range("BoundaryTrajectory: t outside the sampled span");
    }
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - times.begin());
    if (hi == 0) hi = 1;
    if (hi == times.size()) hi = times.size() - 1;
    return hi - 1;
}

double lerp_at(const std::vector<double>& times, const std::vector<double>& ys,
               double t) {
    const std::size_t k = segment_index(times, t);
    const double w = (t - times[k]) / (times[k + 1] - times[k]);
    return ys[k] + w * (ys[k + 1] - ys[k]);
}

}  // namespace

double BoundaryTrajectory::position(double t) const { return lerp_at(times, n_b, t); }

double BoundaryTrajectory::velocity(double t) const { return lerp_at(times, n_b_dot, t); }

// ============================================================================
// Profile
// ============================================================================

double eval_profile(double n, double t, const BoundaryTrajectory& boundary,
                    double theta, const DeviceParams& params) {
    if (!finite(n) || !finite(theta)) {
        throw std::domain_error("eval_profile: non-finite argument");
    }
    params.validate();
    const double nb = boundary.position(t);
    return 1.0 / (1.0 + params.a * std::exp(-params.f0 * theta * (n - nb)));
}

double vca_residual(std::span<const double> grid_n, std::span<const double> grid_t,
                    const BoundaryTrajectory& boundary, double theta,
                    const DeviceParams& params) {
    if (grid_n.size() < 3 || grid_t.size() < 3) {
        throw std::invalid_argument("vca_residual: grids need >= 3 points per axis");
    }
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < grid_t.size(); ++j) {
        const double dt2 = grid_t[j + 1] - grid_t[j - 1];
        for (std::size_t i = 1; i + 1 < grid_n.size(); ++i) {
            const double dn2 = grid_n[i + 1] - grid_n[i - 1];
            const double u_t = (eval_profile(grid_n[i], grid_t[j + 1], boundary, theta, params) -
                                eval_profile(grid_n[i], grid_t[j - 1], boundary, theta, params)) /
                               dt2;
            const double u_n = (eval_profile(grid_n[i + 1], grid_t[j], boundary, theta, params) -
                                eval_profile(grid_n[i - 1], grid_t[j], boundary, theta, params)) /
                               dn2;
            worst = std::max(worst, std::abs(u_t + theta * u_n));
        }
    }
    return worst;
}

double local_wave_velocity(const BoundaryTrajectory& boundary, double t) {
    return -boundary.velocity(t);
}

double wave_velocity_identity_gap(const DeviceParams& params, double n_b0,
                                  double n_b_slope, double n, double t) {
    params.validate();
    if (!finite(n_b0) || !finite(n_b_slope) || !finite(n) || !finite(t)) {
        throw std::domain_error("wave_velocity_identity_gap: non-finite argument");
    }
    const double theta = -n_b_slope;              // wave velocity convention
    const double front = n_b0 + theta * t;        // advected wave-front position
    const double z = -params.f0 * theta * (n - front);
    const double e = params.a * std::exp(z);
    const double denom = (1.0 + e) * (1.0 + e);
    // Independent closed-form derivatives of u = 1/(1 + a*exp(z)).
    const double u_t = -(e / denom) * (params.f0 * theta * theta);
    const double u_n = (e / denom) * (params.f0 * theta);
    if (u_n == 0.0) {
        throw std::domain_error("wave_velocity_identity_gap: flat profile (u_n = 0)");
    }
    return std::abs((-u_t / u_n) - theta);
}

// ============================================================================
// Boundary kinematics
// ============================================================================

double Window::value(double n) const {
    if (n <= 0.0 || n >= 1.0) return 0.0;
    const double ends = std::pow(4.0 * n * (1.0 - n), s);
    const double rel = (n - n_e) / sigma;
    return ends * (1.0 - g * std::exp(-rel * rel));
}

BoundaryState advance_boundary(BoundaryState state, double drive_current, double dt,
                               double mobility, const Window& window) {
    if (!finite(drive_current)) {
        throw std::domain_error("advance_boundary: non-finite drive current");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("advance_boundary: dt must be > 0");
    if (!(state.n_b >= 0.0 && state.n_b <= 1.0)) {
        throw std::invalid_argument("advance_boundary: n_b outside [0,1]");
    }
    const double step = mobility * drive_current * window.value(state.n_b) * dt;
    return BoundaryState{std::clamp(state.n_b + step, 0.0, 1.0), state.t + dt};
}

BoundaryTrajectory sweep_boundary(double n_b0, double drive_current, double mobility,
                                  const Window& window, double dt, std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("sweep_boundary: need >= 2 steps");
    std::vector<double> times(steps), pos(steps), dot(steps);
    BoundaryState state{n_b0, 0.0};
    times[0] = 0.0;
    pos[0] = n_b0;
    for (std::size_t k = 1; k < steps; ++k) {
        const BoundaryState next = advance_boundary(state, drive_current, dt, mobility, window);
        times[k] = next.t;
        pos[k] = next.n_b;
        dot[k - 1] = (next.n_b - state.n_b) / dt;
        state = next;
    }
    dot[steps - 1] = dot[steps - 2];
    return BoundaryTrajectory::with_derivative(std::move(times), std::move(pos), std::move(dot));
}

PlateauAudit plateau_audit(const BoundaryTrajectory& trajectory, double band_lo,
                           double band_hi) {
    trajectory.validate();
    double sum = 0.0, sum_sq = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < trajectory.n_b.size(); ++k) {
        const double n = trajectory.n_b[k];
        if (n >= band_lo && n <= band_hi) {
            const double v = std::abs(trajectory.n_b_dot[k]);
            sum += v;
            sum_sq += v * v;
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument("plateau_audit: no samples inside the plateau band");
    }
    PlateauAudit audit;
    audit.plateau_mean = sum / static_cast<double>(count);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(count) - audit.plateau_mean * audit.plateau_mean);
    audit.plateau_cov = audit.plateau_mean > 0.0 ? std::sqrt(var) / audit.plateau_mean : 0.0;
    audit.start_ratio = std::abs(trajectory.n_b_dot.front()) / audit.plateau_mean;
    audit.end_ratio = std::abs(trajectory.n_b_dot.back()) / audit.plateau_mean;
    return audit;
}

}  // namespace memgrid
