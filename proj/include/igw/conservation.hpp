#pragma once

#include <array>
#include <span>
#include <vector>

#include "igw/coordpoly.hpp"
#include "igw/params.hpp"
#include "igw/state.hpp"

namespace igw {

/// The five nontrivial conservation laws.
enum class LawId {
    V_MEAN,         // d/dt int v = 0
    RHO_MEAN,       // d/dt int rho = 0
    ENERGY,         // d/dt int v^2 + (g^2/N^2) rho^2 + |grad psi|^2 = 0
    SEMI_DILATION,  // density P = f x v - g z rho - |grad psi|^2 / 2
    ROTATION,       // density Q = v rho + f x rho - (N^2/g) z v
};

constexpr std::array<LawId, 5> kAllLaws = {LawId::V_MEAN, LawId::RHO_MEAN, LawId::ENERGY,
                                           LawId::SEMI_DILATION, LawId::ROTATION};
const char* to_string(LawId law);

/// Density and flux components of one law, evaluated pointwise.
struct DensityFluxSet {
    ScalarField density;
    ScalarField flux_x;
    ScalarField flux_z;
};

/// The five integral invariants at one instant, plus a flag telling whether
/// the state is compactly supported enough for the weighted laws (I4, I5)
/// to be trustworthy on the periodic box.
struct ConservedSet {
    double t = 0.0;
    std::array<double, 5> I{};
    bool supported = false;
};

/// Pointwise density of one law (x, z weights from the grid coordinates).
ScalarField density(LawId law, const FlowState& state, const PhysicalParams& params);

/// Density in weighted (coordinate-polynomial) form, for divergence work.
CoordPolyField weighted_density(LawId law, const FlowState& state, const PhysicalParams& params);

/// Density plus both flux components. The tendencies supply psi_xt, psi_zt
/// for the laws whose fluxes contain them (ENERGY, SEMI_DILATION).
DensityFluxSet flux(LawId law, const FlowState& state, const Tendencies& tend,
                    const PhysicalParams& params);

/// D_t(density) assembled by the product rule from the tendencies.
CoordPolyField density_time_derivative(LawId law, const FlowState& state, const Tendencies& tend,
                                       const PhysicalParams& params);

struct DivergenceResidual {
    double max_norm = 0.0;
    double l2_norm = 0.0;
    ScalarField field;
};

/// Pointwise residual D_t(C^t) + D_x(C^x) + D_z(C^z) of one law on a state,
/// D_t from the product rule + tendencies, weighted derivatives expanded.
DivergenceResidual divergence_residual(LawId law, const FlowState& state, const Tendencies& tend,
                                       const PhysicalParams& params);

/// Cross-check mode: D_t(density) from centred differencing of stored
/// snapshots; needs a window of >= 3 consecutive states and evaluates at the
/// window's centre. Accuracy is limited by the snapshot spacing.
DivergenceResidual divergence_residual_window(LawId law, std::span<const FlowState> window,
                                              const PhysicalParams& params);

/// The five quadratures (i1)-(i5).
ConservedSet integral_invariants(const FlowState& state, const PhysicalParams& params);

/// True when the outermost ring of |v|, |rho|, |psi| is below
/// max(1e-12, 1e-9 * field max): the weighted invariants can be trusted.
bool compactly_supported(const FlowState& state);

/// Time until wave/advective signals from the support can reach the
/// boundary: (distance from support to boundary) / (speed estimate).
/// The speed estimate is max(N, |f|) / k_min + max |grad psi|.
double trust_horizon(const FlowState& state, const PhysicalParams& params);

struct DriftReport {
    std::array<double, 5> drift{};  // max_t |I_k(t) - I_k(0)| / scale_k
    std::array<double, 5> scale{};
};

/// Relative drift of each invariant along a trajectory of ConservedSets.
/// A law whose initial value is below 1e-12 * |I3(0)| is scaled by |I3(0)|
/// instead (energy floor), so vanishing invariants do not divide by zero.
DriftReport drift_report(const std::vector<ConservedSet>& series);

/// Pointwise residual of one of the four algebraic identities that reduce
/// the rotation-law time derivative to divergence form (arbitrary smooth
/// fields; weighted derivatives expanded by the product rule):
///   1: v J(psi,rho) + rho J(psi,v) = Dz(v rho psi_x) - Dx(v rho psi_z)
///   2: x J(psi,rho) - rho psi_z    = Dz(x rho psi_x) - Dx(x rho psi_z)
///   3: z J(psi,v)   + v psi_x      = Dz(z v psi_x)   - Dx(z v psi_z)
///   4: z psi_z - x psi_x           = Dz(z psi)       - Dx(x psi)
double jacobian_identity_residual(int which, const ScalarField& v, const ScalarField& rho,
                                  const ScalarField& psi);

/// D_t(Q) assembled from the tendencies vs. the Jacobian-bracket form
/// v[J(psi,rho) - (N^2/g) psi_x] + rho[J(psi,v) - f psi_z]
/// + f x [J(psi,rho) - (N^2/g) psi_x] - (N^2/g) z [J(psi,v) - f psi_z];
/// an algebraic consequence of the governing equations, so it must hold
/// whenever the tendencies are PDE-consistent.
double rotation_density_assembly_residual(const FlowState& state, const Tendencies& tend,
                                          const PhysicalParams& params);

/// Pointwise residual of the reduction of the raw semi-dilation density:
/// (raw density with the divergence and t-terms dropped) = 2 P - 2 E,
/// comparing an independent transcription against the density() evaluators.
double semi_dilation_reduction_residual(const FlowState& state, const PhysicalParams& params);

}  // namespace igw
