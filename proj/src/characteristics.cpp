#include "igw/characteristics.hpp"

#include "igw/spectral.hpp"

namespace igw {

namespace {

/// eta-part evaluated as a weighted field: explicit space-time coefficients
/// plus the field-linear part.
CoordPolyField eval_eta(const SpaceCoeff& sc, const FieldLinear& lin, const FlowState& s, double t) {
    const GridSpec& g = s.grid();
    CoordPolyField out(g);
    if (!sc.c1.is_zero()) out.add(0, 0, ScalarField(g, sc.c1.value(t)));
    if (!sc.cx.is_zero()) out.add(1, 0, ScalarField(g, sc.cx.value(t)));
    if (!sc.cz.is_zero()) out.add(0, 1, ScalarField(g, sc.cz.value(t)));
    if (lin.v != 0.0) out.add(0, 0, lin.v * s.v);
    if (lin.rho != 0.0) out.add(0, 0, lin.rho * s.rho);
    if (lin.psi != 0.0) out.add(0, 0, lin.psi * s.psi);
    return out;
}

/// Subtracts xi^j u_j for one dependent variable u.
void subtract_transport(CoordPolyField& W, const Generator& gen, double t, const ScalarField& u_t,
                        const ScalarField& u_x, const ScalarField& u_z) {
    if (!gen.xi_t.is_zero()) W.add(0, 0, -gen.xi_t.value(t) * u_t);
    auto sub = [&](const SpaceCoeff& xi, const ScalarField& du) {
        if (!xi.c1.is_zero()) W.add(0, 0, -xi.c1.value(t) * du);
        if (!xi.cx.is_zero()) W.add(1, 0, -xi.cx.value(t) * du);
        if (!xi.cz.is_zero()) W.add(0, 1, -xi.cz.value(t) * du);
    };
    sub(gen.xi_x, u_x);
    sub(gen.xi_z, u_z);
}

}  // namespace

CharacteristicTriple characteristics(const Generator& gen, const FlowState& state,
                                     const Tendencies& tend) {
    const double t = state.t;
    CharacteristicTriple W;
    W.W1 = eval_eta(gen.eta_v, gen.lin_v, state, t);
    subtract_transport(W.W1, gen, t, tend.dv_dt, ddx(state.v), ddz(state.v));
    W.W2 = eval_eta(gen.eta_rho, gen.lin_rho, state, t);
    subtract_transport(W.W2, gen, t, tend.drho_dt, ddx(state.rho), ddz(state.rho));
    W.W3 = eval_eta(gen.eta_psi, gen.lin_psi, state, t);
    subtract_transport(W.W3, gen, t, tend.dpsi_dt, ddx(state.psi), ddz(state.psi));
    return W;
}

ScalarField raw_density(const FlowState& state, const CharacteristicTriple& W,
                        const PhysicalParams& params) {
    CoordPolyField acc = W.W1.scaled_by(-1.0 * state.v);
    acc += W.W2.scaled_by(-params.g2_over_N2() * state.rho);
    acc += W.W3.ddx().scaled_by(-1.0 * ddx(state.psi));
    acc += W.W3.ddz().scaled_by(-1.0 * ddz(state.psi));
    return acc.collapse();
}

ScalarField semi_dilation_density_expanded(const FlowState& state, const Tendencies& tend,
                                           const PhysicalParams& params) {
    const GridSpec& g = state.grid();
    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    const double r = params.g2_over_N2();

    ScalarField quad = multiply_dealiased(state.v, state.v) +
                       r * multiply_dealiased(state.rho, state.rho);
    ScalarField gsq = grad_norm_sq(state.psi);

    ScalarField out = 2.0 * (params.f * pointwise(x, state.v) - params.g * pointwise(z, state.rho));
    out -= gsq;
    out += pointwise(x, ddx(quad)) + pointwise(z, ddz(quad));
    out += pointwise(x, ddx(gsq)) + pointwise(z, ddz(gsq));

    const ScalarField psi_x = ddx(state.psi), psi_z = ddz(state.psi);
    const ScalarField psi_xt = ddx(tend.dpsi_dt), psi_zt = ddz(tend.dpsi_dt);
    ScalarField tterm = multiply_dealiased(state.v, tend.dv_dt) +
                        r * multiply_dealiased(state.rho, tend.drho_dt) +
                        multiply_dealiased(psi_x, psi_xt) + multiply_dealiased(psi_z, psi_zt);
    out += state.t * tterm;
    return out;
}

double radial_scaling_identity_residual(const ScalarField& F, const ScalarField& F_x_pr,
                                        const ScalarField& F_z_pr) {
    const GridSpec& g = F.grid();
    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    ScalarField lhs = pointwise(x, F_x_pr) + pointwise(z, F_z_pr);
    // Dx(xF) = F + x Dx(F), Dz(zF) = F + z Dz(F); the -2F cancels exactly,
    // everything left differentiates the assembled product.
    ScalarField rhs = -2.0 * F;
    rhs += F + pointwise(x, ddx(F));
    rhs += F + pointwise(z, ddz(F));
    return max_abs_diff(lhs, rhs);
}

double displacement_identity_residual_quadratic(const FlowState& state,
                                                const PhysicalParams& params) {
    const double r = params.g2_over_N2();
    ScalarField F = multiply_dealiased(state.v, state.v) +
                    r * multiply_dealiased(state.rho, state.rho);
    const ScalarField vx = ddx(state.v), vz = ddz(state.v);
    const ScalarField rx = ddx(state.rho), rz = ddz(state.rho);
    ScalarField Fx = 2.0 * multiply_dealiased(state.v, vx) + 2.0 * r * multiply_dealiased(state.rho, rx);
    ScalarField Fz = 2.0 * multiply_dealiased(state.v, vz) + 2.0 * r * multiply_dealiased(state.rho, rz);
    return radial_scaling_identity_residual(F, Fx, Fz);
}

double displacement_identity_residual_gradsq(const FlowState& state) {
    ScalarField F = grad_norm_sq(state.psi);
    const ScalarField px = ddx(state.psi), pz = ddz(state.psi);
    const ScalarField pxx = ddx(px), pxz = ddz(px), pzz = ddz(pz);
    ScalarField Fx = 2.0 * multiply_dealiased(px, pxx) + 2.0 * multiply_dealiased(pz, pxz);
    ScalarField Fz = 2.0 * multiply_dealiased(px, pxz) + 2.0 * multiply_dealiased(pz, pzz);
    return radial_scaling_identity_residual(F, Fx, Fz);
}

}  // namespace igw
