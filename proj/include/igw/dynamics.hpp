#pragma once

#include <array>

#include "igw/params.hpp"
#include "igw/state.hpp"

namespace igw {

/// Thrown when a time step produces non-finite values; carries the time
/// at which the integration blew up.
class StabilityError : public std::runtime_error {
  public:
    StabilityError(const std::string& msg, double t) : std::runtime_error(msg), t_abort(t) {}
    double t_abort;
};

/// Right-hand sides of the vorticity system:
///   dzeta/dt = g rho_x + f v_z + J(psi, zeta)
///   dv/dt    = -f psi_z + J(psi, v)
///   drho/dt  = -(N^2/g) psi_x + J(psi, rho)
/// with dpsi/dt the zero-mean inverse Laplacian of dzeta/dt.
Tendencies tendencies(const FlowState& state, const PhysicalParams& params);

/// Largest stable time step: min of the advective bound
/// 0.5 * min(dx,dz) / max|grad psi| and the wave bound 0.5 / max(N, |f|).
double max_stable_dt(const FlowState& state, const PhysicalParams& params);

/// Classical 4-stage Runge-Kutta update of (v, rho, zeta); psi re-derived.
/// Throws StabilityError if any non-finite value appears.
FlowState step_rk4(const FlowState& state, double dt, const PhysicalParams& params);

/// Pointwise residuals of the three governing equations in the form
/// LHS - RHS = 0, using the supplied time derivatives (oracle mode when
/// they come from a closed form; self-consistency mode when they come
/// from tendencies()).
///   r1 = laplacian(psi_t) - g rho_x - f v_z - J(psi, zeta)
///   r2 = v_t + f psi_z - J(psi, v)
///   r3 = rho_t + (N^2/g) psi_x - J(psi, rho)
std::array<ScalarField, 3> pde_residual(const FlowState& state, const Tendencies& time_derivatives,
                                        const PhysicalParams& params);

/// Compactly supported initial data: v, rho, psi are Gaussian bumps
/// amplitude * exp(-(r^2) / (2 sigma^2)) with sigma = width/2, centred at
/// (cx, cz). Requires width <= min(Lx, Lz)/8 and boundary values <= 1e-12.
struct GaussianSpec {
    double center_x = 0.0;
    double center_z = 0.0;
    double width = 0.0;  // ~ full width, sigma = width/2
    double amp_v = 0.0;
    double amp_rho = 0.0;
    double amp_psi = 0.0;
};
FlowState gaussian_ic(const GridSpec& grid, const GaussianSpec& spec);

}  // namespace igw
