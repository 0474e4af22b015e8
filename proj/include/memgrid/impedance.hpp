#ifndef MEMGRID_IMPEDANCE_HPP
#define MEMGRID_IMPEDANCE_HPP

/**
 * @file impedance.hpp
 * @brief Closed-form complex impedance decomposition of the vacancy-transport
 *        device, static resistance/reactance partitions, and the dynamic
 *        impedance pairs.
 *
 * The device evaluates as the sum of two impedances,
 *
 *   Z1(phi) = -p*Ln((alpha-1)*exp(f0*(n_b-1)*phi) + (p-1)*alpha)
 *             / (f0*(p-1)*phi) - 1/(2*(p-1))
 *   Z2(phi) = +p*Ln((alpha-1)*exp(f0*n_b*phi)     + (p-1)*alpha)
 *             / (f0*(p-1)*phi) - 1/(2*(p-1))
 *
 * where Ln is the principal complex logarithm (imaginary part in (-pi, pi]).
 * A negative real log argument contributes an imaginary part of magnitude
 * pi*p/(f0*|p-1|*|phi|); when both log arguments share a sign, the two
 * imaginary parts cancel exactly in the sum. Arguments of opposite sign are
 * surfaced through Decomposition::branch_anomaly instead of picking a branch.
 *
 * All functions are pure and safe for parallel sweeps.
 */

#include "memgrid/device_model.hpp"

namespace memgrid {

/// A (resistance, reactance) pair in ohms.
struct ComplexOhms {
    double re = 0.0;  ///< resistance [ohm]
    double im = 0.0;  ///< reactance [ohm]
};

/// Result of the two-impedance split. composite is z1 + z2 by construction.
struct Decomposition {
    ComplexOhms z1;
    ComplexOhms z2;
    ComplexOhms composite;
    /// Set when the two log arguments differ in sign: the reactive parts do
    /// not cancel and no single principal branch reconciles them.
    bool branch_anomaly = false;
    /// Set by small_flux_limit when alpha = 1 removes the flux dependence
    /// entirely (the device degenerates to a constant resistance).
    bool constant_resistance = false;
};

/// Flux state consumed by the decomposition: computed flux phi = integral of
/// v dt, and the boundary position associated with it.
struct FluxState {
    double phi = 0.0;  ///< computed flux [V*s], nonzero for z1/z2/decompose
    double n_b = 0.5;  ///< normalized boundary position in [0,1]
};

/**
 * @brief First component impedance Z1(phi).
 *
 * @throws std::invalid_argument phi = 0, p = 1 or f0 = 0 (preconditions)
 * @throws singular_branch_error log argument exactly zero
 */
ComplexOhms z1(const FluxState& state, const DeviceParams& params);

/// Second component impedance Z2(phi); preconditions and errors as z1().
ComplexOhms z2(const FluxState& state, const DeviceParams& params);

/// Both impedances, their sum, and the branch-anomaly flag.
/// Errors propagate from z1()/z2().
Decomposition decompose(const FluxState& state, const DeviceParams& params);

/**
 * @brief Analytic phi -> 0 limit of the decomposition.
 *
 * The individual impedances carry equal-and-opposite 1/phi poles; the
 * returned z1/z2 are their finite (pole-free) parts and composite is the true
 * limit -1/(p*alpha - 1). Agrees with decompose() at |phi| = 1e-6 to better
 * than 1e-4 relative.
 *
 * alpha = 1 removes the flux dependence of the log arguments; the result is
 * then flagged constant_resistance.
 *
 * @throws std::invalid_argument p = 1 or f0 = 0
 * @throws singular_branch_error p*alpha = 1 (log argument zero at the limit)
 */
Decomposition small_flux_limit(double n_b, const DeviceParams& params);

// ============================================================================
// Static partition and dynamic pairs
// ============================================================================

/// Series split of the static device at boundary position n_b: two resistors
/// and two capacitive reactances (reported as magnitudes; the orientation is
/// -j, i.e. capacitive).
struct StaticPartition {
    double r1 = 0.0;    ///< rho1 * n_b [ohm]
    double r2 = 0.0;    ///< rho2 * (1 - n_b) [ohm]
    double x_c1 = 0.0;  ///< n_b / (omega * eps_geom) [ohm], -j orientation
    double x_c2 = 0.0;  ///< (1 - n_b) / (omega * eps_geom) [ohm]
};

/// @throws std::invalid_argument n_b outside [0,1] or omega <= 0
StaticPartition static_partition(double n_b, double omega,
                                 const DeviceParams& params);

/// Rates of change of the two capacitive reactances (imaginary-axis pair):
/// { -n_b_dot/omega, +n_b_dot/omega } [ohm/s]. The sum is exactly zero; the
/// signs flip with the sign of n_b_dot and both vanish when the boundary is
/// stationary.
struct ReactanceRatePair {
    double x_c1_dot = 0.0;
    double x_c2_dot = 0.0;
};

/// @throws std::invalid_argument omega <= 0
ReactanceRatePair dynamic_reactance_pair(double n_b_dot, double omega);

/// Rates of change of the two component resistances:
/// { rho1*n_b_dot, -rho2*n_b_dot } [ohm/s]. Sums to zero iff rho1 = rho2.
struct ResistanceRatePair {
    double r1_dot = 0.0;
    double r2_dot = 0.0;
};

ResistanceRatePair dynamic_resistance_pair(double n_b_dot,
                                           const DeviceParams& params);

// ============================================================================
// Flux -> boundary closure
// ============================================================================

/// Monotone saturating map used by flux-driven simulations:
///   n_b(phi) = 1 / (1 + exp(-kappa*(phi - phi0)))
/// kappa = 0 freezes the boundary at 0.5.
double boundary_from_flux(double phi, double kappa, double phi0);

}  // namespace memgrid

#endif  // MEMGRID_IMPEDANCE_HPP
