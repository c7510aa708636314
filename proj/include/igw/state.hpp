#pragma once

#include "igw/field.hpp"
#include "igw/spectral.hpp"

namespace igw {

/// The flow at one instant: transverse velocity v, density perturbation rho,
/// streamfunction psi (zero-mean gauge) and its cached vorticity zeta.
///
/// Prognostic variables are (v, rho, zeta); psi is always diagnosed from
/// zeta through the periodic Poisson solve.
struct FlowState {
    double t = 0.0;
    ScalarField v;
    ScalarField rho;
    ScalarField psi;
    ScalarField zeta;

    FlowState() = default;

    /// Builds from (v, rho, psi): re-gauges psi to zero mean, derives zeta.
    static FlowState from_psi(double t, ScalarField v, ScalarField rho, const ScalarField& psi) {
        FlowState s;
        s.t = t;
        s.v = std::move(v);
        s.rho = std::move(rho);
        s.psi = remove_mean(psi);
        s.v.check_same_grid(s.rho);
        s.v.check_same_grid(s.psi);
        s.zeta = laplacian(s.psi);
        return s;
    }

    /// Builds from (v, rho, zeta): psi solved from the Poisson problem.
    static FlowState from_zeta(double t, ScalarField v, ScalarField rho, ScalarField zeta) {
        FlowState s;
        s.t = t;
        s.v = std::move(v);
        s.rho = std::move(rho);
        s.zeta = std::move(zeta);
        s.v.check_same_grid(s.rho);
        s.v.check_same_grid(s.zeta);
        s.psi = invert_laplacian(remove_mean(s.zeta));
        return s;
    }

    static FlowState zero(const GridSpec& grid, double t = 0.0) {
        FlowState s;
        s.t = t;
        s.v = ScalarField(grid);
        s.rho = ScalarField(grid);
        s.psi = ScalarField(grid);
        s.zeta = ScalarField(grid);
        return s;
    }

    const GridSpec& grid() const { return v.grid(); }

    bool all_finite() const {
        return v.all_finite() && rho.all_finite() && psi.all_finite() && zeta.all_finite();
    }
};

/// Time derivatives of the state; dpsi_dt is the zero-mean solution of
/// laplacian(dpsi_dt) = dzeta_dt.
struct Tendencies {
    ScalarField dv_dt;
    ScalarField drho_dt;
    ScalarField dzeta_dt;
    ScalarField dpsi_dt;
};

}  // namespace igw
