#ifndef MEMGRID_SIMULATOR_HPP
#define MEMGRID_SIMULATOR_HPP

/**
 * @file simulator.hpp
 * @brief Fixed-step time-domain driver: integrates flux from a periodic
 *        voltage drive, evolves the accumulation boundary, computes the
 *        current through the composite resistance, and audits pinch, lobes,
 *        NDR and per-component energy.
 */

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "memgrid/device_model.hpp"
#include "memgrid/impedance.hpp"

namespace memgrid {

// ============================================================================
// Drive and configuration
// ============================================================================

enum class Waveform { Sine, Triangle };

struct DriveSignal {
    Waveform waveform = Waveform::Sine;
    double amplitude = 5.0;  ///< [V], >= 0
    double frequency = 1.0;  ///< [Hz], > 0
    double phase = 0.0;      ///< [rad]

    double value(double t) const;
    double period() const { return 1.0 / frequency; }
    void validate() const;  ///< throws std::invalid_argument
};

enum class Coupling { FluxDriven, CurrentDriven };

struct SimConfig {
    double dt = 1e-3;  ///< step [s]; must resolve >= 200 steps per period and
                       ///< divide the period to within 1e-6 steps
    int cycles = 3;    ///< >= 1
    Coupling coupling = Coupling::FluxDriven;

    double mobility = 30.0;  ///< current-driven: boundary motion per coulomb
    double n_b0 = 0.5;       ///< current-driven: initial boundary position
    Window window{};         ///< current-driven: velocity limiter knobs

    double kappa = 3.0;  ///< flux-driven map steepness
    double phi0 = 0.3;   ///< flux-driven map center [V*s]; a nonzero offset
                         ///< keeps R(phi) asymmetric so the lobes have area

    /// Initial flux phi(0) [V*s]. When center_flux is set it is replaced by
    /// -(half the drive's flux swing), which centers phi about zero.
    double phi_initial = 0.0;
    bool center_flux = true;

    void validate(const DriveSignal& drive) const;
    std::size_t steps_per_cycle(const DriveSignal& drive) const;
    double initial_flux(const DriveSignal& drive) const;
};

// ============================================================================
// Trace
// ============================================================================

/// Per-step records of one simulation run. All columns have equal length
/// cycles * steps_per_cycle + 1.
struct Trace {
    std::vector<double> t;        ///< [s]
    std::vector<double> v;        ///< drive voltage [V]
    std::vector<double> i;        ///< current [A]
    std::vector<double> phi;      ///< computed flux [V*s]
    std::vector<double> n_b;      ///< boundary position
    std::vector<double> r;        ///< composite resistance [ohm]
    std::vector<ComplexOhms> z1;  ///< component impedances [ohm]
    std::vector<ComplexOhms> z2;
    std::vector<double> p1;  ///< component instantaneous powers [W]
    std::vector<double> p2;

    std::size_t steps_per_cycle = 0;
    int cycles = 0;
    double dt = 0.0;
    double amplitude = 0.0;  ///< drive amplitude, for zero-crossing tolerance

    std::size_t size() const { return t.size(); }
};

// ============================================================================
// Operations
// ============================================================================

/// Trapezoidal cumulative integral of v over a uniform grid with step dt,
/// starting from phi_initial (default 0).
std::vector<double> integrate_flux(std::span<const double> v, double dt,
                                   double phi_initial = 0.0);

/**
 * @brief Runs one simulation. Deterministic: identical inputs produce
 *        bit-identical traces.
 *
 * Per step: v from the drive; phi by trapezoidal integration; n_b from the
 * configured coupling (flux-driven: boundary_from_flux(phi); current-driven:
 * advance_boundary with the previous step's current); R from decompose()
 * (flux-driven; small_flux_limit near phi = 0) or the static partition sum
 * (current-driven); i = v/R; component powers p_k = i^2 * re(z_k).
 *
 * @throws simulation_integrity_error composite R <= 0 observed (the run
 *         aborts loudly instead of clamping)
 * @throws std::invalid_argument      invalid drive or config
 */
Trace run(const DriveSignal& drive, const DeviceParams& device,
          const SimConfig& cfg);

// ============================================================================
// Audits (pure functions over completed traces)
// ============================================================================

struct PinchAudit {
    bool pinched = false;
    double max_current_at_zero_voltage = 0.0;  ///< [A]
};

/**
 * @brief Checks that the trace current vanishes wherever the drive voltage
 *        crosses zero.
 *
 * Samples with |v| < 1e-9 * amplitude are tested directly against tol_abs
 * (default 1e-12 + 1e-9 * max|i|). Between-sample sign changes of v are
 * tested at the interpolated crossing with an additional slack bounded by the
 * local second difference of i (linear-interpolation error bound).
 *
 * @throws std::invalid_argument trace shorter than one full cycle
 */
PinchAudit detect_pinch(const Trace& trace, double tol_abs = -1.0);

/// Shoelace area of the (v, i) curve, one value per cycle [W]. Each
/// origin-crossing lobe of the pinched figure-eight is taken in its own
/// orientation (the plain full-cycle line integral cancels between the two
/// lobes of any flux-mapped device under a zero-mean drive). Zero for a
/// frozen boundary; negates under reversed traversal.
/// @throws std::invalid_argument trace does not hold an integer cycle count
std::vector<double> loop_areas(const Trace& trace);

/// Mean of the per-cycle signed loop areas.
double loop_area(const Trace& trace);

struct NdrAudit {
    /// Steps where min(re(z1), re(z2)) < 0 (a component resistance negative).
    std::vector<std::size_t> component_negative_steps;
    /// Contiguous [first, last] step ranges where the discrete dV/dI of the
    /// terminal curve is negative.
    std::vector<std::pair<std::size_t, std::size_t>> terminal_intervals;

    bool empty() const {
        return component_negative_steps.empty() && terminal_intervals.empty();
    }
};

NdrAudit detect_ndr(const Trace& trace);

struct EnergyAudit {
    double e1 = 0.0;       ///< component energies over the trace [J]
    double e2 = 0.0;
    double e_total = 0.0;  ///< e1 + e2; >= 0 for the composite
    double neg1 = 0.0;     ///< energy sourced by component 1: sum of
                           ///< min(p1, 0)*dt, <= 0
    double neg2 = 0.0;
    /// True iff a component dissipated negative energy overall or sourced
    /// energy over some interval (the activity marker).
    bool active_component = false;
};

EnergyAudit energy_audit(const Trace& trace);

/// Ideal-memristor current law under a constant voltage:
/// i(t) = 3*v*(phi0 + v*t)^2. Unbounded as t -> infinity for v != 0, with
/// square-law growth i(2t)/i(t) -> 4.
double ideal_memristor_current(double t, double v_const, double phi0);

}  // namespace memgrid

#endif  // MEMGRID_SIMULATOR_HPP
