#include "memgrid/impedance.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "memgrid/errors.hpp"

namespace memgrid {

namespace {

void check_preconditions(const FluxState& state, const DeviceParams& params) {
    params.validate();
    if (params.p == 1.0) throw std::invalid_argument("impedance: p must differ from 1");
    if (params.f0 == 0.0) throw std::invalid_argument("impedance: f0 must be nonzero");
    if (state.phi == 0.0) {
        throw std::invalid_argument("impedance: phi must be nonzero (use small_flux_limit)");
    }
    if (!std::isfinite(state.phi) || !std::isfinite(state.n_b)) {
        throw std::invalid_argument("impedance: non-finite flux state");
    }
    if (!(state.n_b >= 0.0 && state.n_b <= 1.0)) {
        throw std::invalid_argument("impedance: n_b outside [0,1]");
    }
}

// Real log argument of component k (k = 1 uses n_b - 1, k = 2 uses n_b).
double log_argument(const FluxState& state, const DeviceParams& params, int component) {
    const double c = (component == 1) ? state.n_b - 1.0 : state.n_b;
    const double argument = (params.alpha - 1.0) * std::exp(params.f0 * c * state.phi) +
                            (params.p - 1.0) * params.alpha;
    if (!std::isfinite(argument)) {
        throw std::domain_error("impedance: profile exponential overflowed (f0 * phi too large)");
    }
    return argument;
}

// Principal complex logarithm of a real argument: negative reals pick up +i*pi.
std::complex<double> principal_log(double argument) {
    if (argument == 0.0) {
        throw singular_branch_error("impedance: log argument is exactly zero");
    }
    return std::log(std::complex<double>(argument, 0.0));
}

ComplexOhms component(const FluxState& state, const DeviceParams& params, int which) {
    check_preconditions(state, params);
    const double sign = (which == 1) ? -1.0 : 1.0;
    const std::complex<double> ln = principal_log(log_argument(state, params, which));
    const double denom = params.f0 * (params.p - 1.0) * state.phi;
    const double offset = 1.0 / (2.0 * (params.p - 1.0));
    const std::complex<double> value = sign * params.p * ln / denom - offset;
    return ComplexOhms{value.real(), value.imag()};
}

}  // namespace

ComplexOhms z1(const FluxState& state, const DeviceParams& params) {
    return component(state, params, 1);
}

ComplexOhms z2(const FluxState& state, const DeviceParams& params) {
    return component(state, params, 2);
}

Decomposition decompose(const FluxState& state, const DeviceParams& params) {
    check_preconditions(state, params);
    const double arg1 = log_argument(state, params, 1);
    const double arg2 = log_argument(state, params, 2);
    Decomposition dec;
    dec.z1 = component(state, params, 1);
    dec.z2 = component(state, params, 2);
    dec.composite = ComplexOhms{dec.z1.re + dec.z2.re, dec.z1.im + dec.z2.im};
    dec.branch_anomaly = (arg1 < 0.0) != (arg2 < 0.0);
    return dec;
}

Decomposition small_flux_limit(double n_b, const DeviceParams& params) {
    params.validate();
    if (params.p == 1.0) throw std::invalid_argument("small_flux_limit: p must differ from 1");
    if (params.f0 == 0.0) throw std::invalid_argument("small_flux_limit: f0 must be nonzero");
    if (!(n_b >= 0.0 && n_b <= 1.0)) {
        throw std::invalid_argument("small_flux_limit: n_b outside [0,1]");
    }
    const double base = params.p * params.alpha - 1.0;  // common log argument at phi = 0
    if (base == 0.0) {
        throw singular_branch_error("small_flux_limit: log argument is zero at phi = 0");
    }
    Decomposition dec;
    const double offset = 1.0 / (2.0 * (params.p - 1.0));
    if (params.alpha == 1.0) {
        // The log arguments lose their flux dependence entirely.
        dec.z1 = ComplexOhms{-offset, 0.0};
        dec.z2 = ComplexOhms{-offset, 0.0};
        dec.constant_resistance = true;
    } else {
        // First-order series of the log argument in phi. The equal-and-opposite
        // 1/phi poles of the components cancel in the sum; these are the
        // finite parts.
        const double k = (params.alpha - 1.0) * params.f0 / base;
        const double scale = params.p / (params.f0 * (params.p - 1.0));
        dec.z1 = ComplexOhms{-scale * k * (n_b - 1.0) - offset, 0.0};
        dec.z2 = ComplexOhms{scale * k * n_b - offset, 0.0};
    }
    dec.composite = ComplexOhms{dec.z1.re + dec.z2.re, dec.z1.im + dec.z2.im};
    return dec;
}

// ============================================================================
// Static partition and dynamic pairs
// ============================================================================

StaticPartition static_partition(double n_b, double omega, const DeviceParams& params) {
    params.validate();
    if (!(n_b >= 0.0 && n_b <= 1.0)) {
        throw std::invalid_argument("static_partition: n_b outside [0,1]");
    }
    if (!(omega > 0.0)) {
        throw std::invalid_argument("static_partition: omega must be > 0");
    }
    StaticPartition part;
    part.r1 = params.rho1 * n_b;
    part.r2 = params.rho2 * (1.0 - n_b);
    part.x_c1 = n_b / (omega * params.eps_geom);
    part.x_c2 = (1.0 - n_b) / (omega * params.eps_geom);
    return part;
}

ReactanceRatePair dynamic_reactance_pair(double n_b_dot, double omega) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("dynamic_reactance_pair: omega must be > 0");
    }
    const double q = n_b_dot / omega;
    return ReactanceRatePair{-q, q};
}

ResistanceRatePair dynamic_resistance_pair(double n_b_dot, const DeviceParams& params) {
    params.validate();
    return ResistanceRatePair{params.rho1 * n_b_dot, -params.rho2 * n_b_dot};
}

double boundary_from_flux(double phi, double kappa, double phi0) {
    return 1.0 / (1.0 + std::exp(-kappa * (phi - phi0)));
}

}  // namespace memgrid
