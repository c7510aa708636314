#pragma once

#include <array>
#include <memory>

#include "igw/params.hpp"
#include "igw/state.hpp"

namespace igw {

/// Pointwise jet of a solution: values, first time derivatives, and the
/// spatial derivatives of psi needed to evaluate the governing equations
/// at a point (third order in space, mixed first order in t).
struct FlowJet {
    double v = 0, v_t = 0, v_x = 0, v_z = 0;
    double rho = 0, rho_t = 0, rho_x = 0, rho_z = 0;
    double psi = 0, psi_t = 0, psi_x = 0, psi_z = 0;
    double psi_xx = 0, psi_xz = 0, psi_zz = 0;
    double psi_xt = 0, psi_zt = 0;
    double psi_xxx = 0, psi_xxz = 0, psi_xzz = 0, psi_zzz = 0;
    double psi_xxt = 0, psi_xzt = 0, psi_zzt = 0;
};

/// A continuous solution representation: returns the full jet at any
/// space-time point. Implementations are immutable once built.
class SolutionSampler {
  public:
    virtual ~SolutionSampler() = default;
    virtual FlowJet at(double t, double x, double z) const = 0;
};

using SamplerPtr = std::shared_ptr<const SolutionSampler>;

/// Residuals of the three governing equations evaluated from a jet alone
/// (all derivatives analytic; no grid, no spectral step).
inline std::array<double, 3> residual_at(const FlowJet& j, const PhysicalParams& p) {
    const double lap_psi_t = j.psi_xxt + j.psi_zzt;
    const double lap_psi_x = j.psi_xxx + j.psi_xzz;
    const double lap_psi_z = j.psi_xxz + j.psi_zzz;
    const double r1 = lap_psi_t - p.g * j.rho_x - p.f * j.v_z - (j.psi_x * lap_psi_z - j.psi_z * lap_psi_x);
    const double r2 = j.v_t + p.f * j.psi_z - (j.psi_x * j.v_z - j.psi_z * j.v_x);
    const double r3 = j.rho_t + p.N2_over_g() * j.psi_x - (j.psi_x * j.rho_z - j.psi_z * j.rho_x);
    return {r1, r2, r3};
}

/// Max-norm of the pointwise governing-equation residuals over all grid
/// sample points at time t.
double max_residual_on_grid(const SolutionSampler& sol, const GridSpec& grid, double t,
                            const PhysicalParams& params);

/// Grid snapshot of a (periodic) sampler: v, rho, psi sampled pointwise,
/// psi re-gauged, zeta derived spectrally.
FlowState sample_state(const SolutionSampler& sol, const GridSpec& grid, double t);

/// Grid snapshot of the sampler's analytic time derivatives, packaged as
/// Tendencies (dpsi_dt re-gauged to zero mean, dzeta_dt derived spectrally).
Tendencies sample_time_derivatives(const SolutionSampler& sol, const GridSpec& grid, double t);

}  // namespace igw
