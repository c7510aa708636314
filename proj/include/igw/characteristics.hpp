#pragma once

#include "igw/generators.hpp"
#include "igw/state.hpp"

namespace igw {

/// Characteristics W^alpha = eta^alpha - xi^t u_t^alpha - xi^x u_x^alpha
/// - xi^z u_z^alpha of a generator on a state, one per dependent variable
/// (v, rho, psi). Kept in weighted form so the density formula can take
/// total derivatives of W3 without differentiating coordinates spectrally;
/// collapse() gives the plain fields.
struct CharacteristicTriple {
    CoordPolyField W1, W2, W3;

    ScalarField w1() const { return W1.collapse(); }
    ScalarField w2() const { return W2.collapse(); }
    ScalarField w3() const { return W3.collapse(); }
};

/// Assembles the characteristics from the generator's coefficient table,
/// the state's spectral spatial derivatives and the given time derivatives.
CharacteristicTriple characteristics(const Generator& gen, const FlowState& state,
                                     const Tendencies& tend);

/// Conservation-law density from a characteristic triple:
///   C1 = -v W1 - (g^2/N^2) rho W2 - psi_x Dx(W3) - psi_z Dz(W3),
/// weighted terms expanded before discretisation.
ScalarField raw_density(const FlowState& state, const CharacteristicTriple& W,
                        const PhysicalParams& params);

/// Independent expansion of the semi-dilation raw density,
///   2(f x v - g z rho) - |grad psi|^2
///   + (x Dx + z Dz)(v^2 + (g^2/N^2) rho^2) + (x Dx + z Dz)(|grad psi|^2)
///   + t [v v_t + (g^2/N^2) rho rho_t + psi_x psi_xt + psi_z psi_zt],
/// with the scaling terms differentiating the assembled products. Checked
/// pointwise against raw_density(characteristics(X8)) — pure algebra, so it
/// must agree on arbitrary smooth fields.
ScalarField semi_dilation_density_expanded(const FlowState& state, const Tendencies& tend,
                                           const PhysicalParams& params);

/// Residual of the scaling identity
///   (x Dx + z Dz) F = -2 F + Dx(x F) + Dz(z F)
/// where the left side is assembled by the product rule from the primitive
/// factors (supplied as F_x_pr, F_z_pr) and the right side differentiates
/// the assembled product F spectrally.
double radial_scaling_identity_residual(const ScalarField& F, const ScalarField& F_x_pr,
                                        const ScalarField& F_z_pr);

/// The two concrete scaling identities used to reduce the semi-dilation
/// density: F = v^2 + (g^2/N^2) rho^2 and F = |grad psi|^2.
double displacement_identity_residual_quadratic(const FlowState& state, const PhysicalParams& params);
double displacement_identity_residual_gradsq(const FlowState& state);

}  // namespace igw
