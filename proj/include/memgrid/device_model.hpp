#ifndef MEMGRID_DEVICE_MODEL_HPP
#define MEMGRID_DEVICE_MODEL_HPP

/**
 * @file device_model.hpp
 * @brief Vacancy-transport device model: phenomenological parameters, the
 *        logistic concentration profile, boundary kinematics, and
 *        finite-difference verification of the governing advection equation.
 *
 * All positions are normalized to the device length (n = x/d in [0,1]).
 * Every function here is pure; values are safe to share across threads.
 */

#include <cstddef>
#include <span>
#include <vector>

namespace memgrid {

// ============================================================================
// Parameters
// ============================================================================

/// Phenomenological constants of the vacancy-transport model.
///
/// The closed-form impedance decomposition is only guaranteed to have a
/// positive composite resistance and exactly cancelling reactive parts when
/// p and alpha both lie in (0,1); the defaults are chosen inside that regime.
struct DeviceParams {
    double a = 1.0;          ///< logistic amplitude coefficient, > 0
    double f0 = 10.0;        ///< profile steepness (normalized length), != 0
    double p = 0.5;          ///< resistivity-ratio parameter, != 1
    double alpha = 0.5;      ///< concentration-ratio parameter; 1 degenerates
                             ///< the decomposition to a constant resistance
    double d = 1e-8;         ///< device length [m]; only used to normalize
    double rho1 = 100.0;     ///< low-side resistivity coefficient [ohm], > 0
    double rho2 = 400.0;     ///< high-side resistivity coefficient [ohm], > 0
    double eps_geom = 1e-12; ///< lumped eps0*eps_r*A dielectric factor [F], > 0
    double area = 1e-12;     ///< cross-section [m^2], informational

    /// Throws std::invalid_argument if an invariant is violated
    /// (a > 0, f0 != 0, p != 1, alpha != 1, rho1/rho2/eps_geom/d > 0).
    void validate() const;
};

// ============================================================================
// Boundary trajectory
// ============================================================================

/// Sampled normalized accumulation-boundary position n_b(t) and its time
/// derivative. Positions between samples are linearly interpolated.
struct BoundaryTrajectory {
    std::vector<double> times;    ///< strictly increasing sample instants [s]
    std::vector<double> n_b;      ///< boundary positions, each in [0,1]
    std::vector<double> n_b_dot;  ///< d(n_b)/dt [1/s]

    /// Builds a trajectory from (t, n_b) samples; the derivative is filled in
    /// by central differences (one-sided at the ends).
    static BoundaryTrajectory from_samples(std::vector<double> times,
                                           std::vector<double> n_b);

    /// Builds a trajectory with an explicitly supplied derivative.
    static BoundaryTrajectory with_derivative(std::vector<double> times,
                                              std::vector<double> n_b,
                                              std::vector<double> n_b_dot);

    /// Constant-velocity trajectory n_b(t) = n_b0 + slope*(t - t0), sampled
    /// uniformly on [t0, t1]. Positions are clamped to [0,1].
    static BoundaryTrajectory linear(double n_b0, double slope, double t0,
                                     double t1, std::size_t samples);

    /// n_b at time t (linear interpolation). Throws std::out_of_range if t is
    /// outside [times.front(), times.back()].
    double position(double t) const;

    /// n_b_dot at time t (linear interpolation). Throws std::out_of_range as
    /// position() does.
    double velocity(double t) const;

    double t_min() const { return times.front(); }
    double t_max() const { return times.back(); }

    /// Throws std::invalid_argument on inconsistent sizes, non-increasing
    /// times, or positions outside [0,1].
    void validate() const;
};

// ============================================================================
// Profile and governing-equation checks
// ============================================================================

/**
 * @brief Logistic vacancy-concentration profile.
 *
 * u(n,t) = 1 / (1 + a * exp(-f0 * theta * (n - n_b(t))))
 *
 * with n_b(t) interpolated from the trajectory. The result lies strictly in
 * (0,1) and is monotone in n: increasing when f0*theta > 0, decreasing when
 * f0*theta < 0.
 *
 * @param n        normalized position in [0,1]
 * @param t        time within the trajectory span [s]
 * @param boundary accumulation-boundary trajectory
 * @param theta    local wave velocity [1/s]
 * @param params   device parameters (a, f0)
 * @throws std::out_of_range  t outside the trajectory span
 * @throws std::domain_error  non-finite n, t or theta
 */
double eval_profile(double n, double t, const BoundaryTrajectory& boundary,
                    double theta, const DeviceParams& params);

/**
 * @brief Maximum |u_t + theta * u_n| over a grid, by central differences of
 *        eval_profile.
 *
 * Interior points only: both grids need at least 3 points and the residual is
 * evaluated away from the first/last entries. When the trajectory moves at
 * velocity theta (so the profile is an exact traveling wave), the residual is
 * pure truncation error and shrinks at second order in the grid spacing.
 *
 * @throws std::invalid_argument fewer than 3 points on either axis
 */
double vca_residual(std::span<const double> grid_n,
                    std::span<const double> grid_t,
                    const BoundaryTrajectory& boundary, double theta,
                    const DeviceParams& params);

/// Local wave velocity at time t: theta = -n_b_dot(t).
/// Throws std::out_of_range if t is outside the trajectory span.
double local_wave_velocity(const BoundaryTrajectory& boundary, double t);

/**
 * @brief Analytic-derivative check of the boundary-velocity identity
 *        theta = -u_t/u_x = -n_b'(t).
 *
 * Builds the characteristic solution of u_t + theta*u_n = 0 whose wave front
 * starts at n_b0 and is advected at theta = -n_b_slope, differentiates it in
 * closed form at (n, t), and returns |(-u_t/u_x) - (-n_b_slope)|. Exact up to
 * rounding; u_t and u_x are evaluated as independent expressions.
 */
double wave_velocity_identity_gap(const DeviceParams& params, double n_b0,
                                  double n_b_slope, double n, double t);

// ============================================================================
// Boundary kinematics (current-driven closure)
// ============================================================================

/// Smooth velocity limiter for the boundary update:
///   w(n) = [4n(1-n)]^s * (1 - g*exp(-((n - n_e)/sigma)^2))
/// Zero at both ends, a wide interior plateau, and a localized dip at the
/// entry position n_e.
struct Window {
    double s = 1.0;      ///< flatness exponent of the end-stop factor
    double g = 0.5;      ///< entry-dip depth in [0,1)
    double n_e = 0.15;   ///< entry-dip center
    double sigma = 0.05; ///< entry-dip width

    double value(double n) const;
};

struct BoundaryState {
    double n_b = 0.0;
    double t = 0.0;
};

/**
 * @brief One explicit step of the current-driven boundary update:
 *        n_b <- clamp(n_b + mobility * i * w(n_b) * dt, 0, 1).
 *
 * @throws std::domain_error    non-finite drive current
 * @throws std::invalid_argument dt <= 0 or n_b outside [0,1]
 */
BoundaryState advance_boundary(BoundaryState state, double drive_current,
                               double dt, double mobility,
                               const Window& window);

/// Repeated advance_boundary under a constant drive current, recorded as a
/// trajectory. The velocity samples are the per-step increments / dt.
BoundaryTrajectory sweep_boundary(double n_b0, double drive_current,
                                  double mobility, const Window& window,
                                  double dt, std::size_t steps);

/// Shape audit of a boundary-velocity trace: compares the velocity samples
/// taken while n_b is inside [band_lo, band_hi] (the interior plateau)
/// against the first and last samples of the trace.
struct PlateauAudit {
    double plateau_mean = 0.0;  ///< mean |velocity| over the plateau band
    double plateau_cov = 0.0;   ///< coefficient of variation over the band
    double start_ratio = 0.0;   ///< |first velocity| / plateau_mean
    double end_ratio = 0.0;     ///< |last velocity| / plateau_mean
};

PlateauAudit plateau_audit(const BoundaryTrajectory& trajectory,
                           double band_lo = 0.40, double band_hi = 0.65);

}  // namespace memgrid

#endif  // MEMGRID_DEVICE_MODEL_HPP
