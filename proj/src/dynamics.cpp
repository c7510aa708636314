#include "igw/dynamics.hpp"

#include <cmath>

namespace igw {

Tendencies tendencies(const FlowState& state, const PhysicalParams& params) {
    state.v.check_same_grid(state.rho);
    state.v.check_same_grid(state.psi);
    state.v.check_same_grid(state.zeta);
    detail::require_finite(state.v, "tendencies(v)");
    detail::require_finite(state.rho, "tendencies(rho)");
    detail::require_finite(state.psi, "tendencies(psi)");

    Tendencies out;
    out.dzeta_dt = params.g * ddx(state.rho) + params.f * ddz(state.v) + jacobian(state.psi, state.zeta);
    out.dv_dt = -params.f * ddz(state.psi) + jacobian(state.psi, state.v);
    out.drho_dt = -params.N2_over_g() * ddx(state.psi) + jacobian(state.psi, state.rho);
    out.dpsi_dt = invert_laplacian(remove_mean(out.dzeta_dt));
    return out;
}

double max_stable_dt(const FlowState& state, const PhysicalParams& params) {
    const double speed = std::max(ddx(state.psi).max_abs(), ddz(state.psi).max_abs());
    const double h = std::min(state.grid().dx(), state.grid().dz());
    const double dt_adv = (speed > 0.0) ? 0.5 * h / speed : std::numeric_limits<double>::infinity();
    const double wave = std::max(params.N, std::abs(params.f));
    const double dt_wave = 0.5 / wave;
    return std::min(dt_adv, dt_wave);
}

namespace {

struct Prognostic {
    ScalarField v, rho, zeta;
};

Prognostic rhs(const Prognostic& y, const PhysicalParams& params) {
    // zeta's mean is conserved at round-off level; keep psi solvable.
    FlowState s = FlowState::from_zeta(0.0, y.v, y.rho, y.zeta);
    Tendencies t = tendencies(s, params);
    return {std::move(t.dv_dt), std::move(t.drho_dt), std::move(t.dzeta_dt)};
}

Prognostic axpy_state(const Prognostic& y, double a, const Prognostic& k) {
    Prognostic out = y;
    axpy(a, k.v, out.v);
    axpy(a, k.rho, out.rho);
    axpy(a, k.zeta, out.zeta);
    return out;
}

}  // namespace

FlowState step_rk4(const FlowState& state, double dt, const PhysicalParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be > 0");
    Prognostic y{state.v, state.rho, state.zeta};

    auto stage = [&](const Prognostic& p) {
        const bool finite = p.v.all_finite() && p.rho.all_finite() && p.zeta.all_finite();
        try {
            if (finite) return rhs(p, params);
        } catch (const std::invalid_argument&) {
            // overflow inside a product: fall through to the abort below
        }
        throw StabilityError("step_rk4: non-finite stage values at t = " + std::to_string(state.t) +
                                 " (dt = " + std::to_string(dt) +
                                 " likely above the stability limit)",
                             state.t);
    };

    const Prognostic k1 = stage(y);
    const Prognostic k2 = stage(axpy_state(y, 0.5 * dt, k1));
    const Prognostic k3 = stage(axpy_state(y, 0.5 * dt, k2));
    const Prognostic k4 = stage(axpy_state(y, dt, k3));

    Prognostic next = y;
    const double w = dt / 6.0;
    axpy(w, k1.v, next.v);
    axpy(2 * w, k2.v, next.v);
    axpy(2 * w, k3.v, next.v);
    axpy(w, k4.v, next.v);
    axpy(w, k1.rho, next.rho);
    axpy(2 * w, k2.rho, next.rho);
    axpy(2 * w, k3.rho, next.rho);
    axpy(w, k4.rho, next.rho);
    axpy(w, k1.zeta, next.zeta);
    axpy(2 * w, k2.zeta, next.zeta);
    axpy(2 * w, k3.zeta, next.zeta);
    axpy(w, k4.zeta, next.zeta);

    if (!next.v.all_finite() || !next.rho.all_finite() || !next.zeta.all_finite())
        throw StabilityError("step_rk4: non-finite values at t = " + std::to_string(state.t + dt) +
                                 " (dt = " + std::to_string(dt) + " likely above the stability limit)",
                             state.t + dt);
    return FlowState::from_zeta(state.t + dt, std::move(next.v), std::move(next.rho),
                                std::move(next.zeta));
}

std::array<ScalarField, 3> pde_residual(const FlowState& state, const Tendencies& time_derivatives,
                                        const PhysicalParams& params) {
    const ScalarField& psi = state.psi;
    ScalarField r1 = laplacian(time_derivatives.dpsi_dt) - params.g * ddx(state.rho) -
                     params.f * ddz(state.v) - jacobian(psi, state.zeta);
    ScalarField r2 = time_derivatives.dv_dt + params.f * ddz(psi) - jacobian(psi, state.v);
    ScalarField r3 = time_derivatives.drho_dt + params.N2_over_g() * ddx(psi) - jacobian(psi, state.rho);
    return {std::move(r1), std::move(r2), std::move(r3)};
}

FlowState gaussian_ic(const GridSpec& grid, const GaussianSpec& spec) {
    const double limit = std::min(grid.Lx, grid.Lz) / 8.0;
    if (!(spec.width > 0.0) || spec.width > limit)
        throw std::invalid_argument("gaussian_ic: width must be in (0, min(Lx,Lz)/8]");
    const double sigma = spec.width / 2.0;
    // Nearest boundary distance from the bump centre.
    const double dxb = grid.Lx / 2.0 - std::abs(spec.center_x);
    const double dzb = grid.Lz / 2.0 - std::abs(spec.center_z);
    const double d = std::min(dxb, dzb);
    if (std::exp(-d * d / (2.0 * sigma * sigma)) > 1e-12)
        throw std::invalid_argument("gaussian_ic: bump is not compactly supported (boundary value > 1e-12)");

    auto bump = [&](double amp) {
        return sample(grid, [&](double x, double z) {
            const double rx = x - spec.center_x;
            const double rz = z - spec.center_z;
            return amp * std::exp(-(rx * rx + rz * rz) / (2.0 * sigma * sigma));
        });
    };
    return FlowState::from_psi(0.0, bump(spec.amp_v), bump(spec.amp_rho), bump(spec.amp_psi));
}

}  // namespace igw
