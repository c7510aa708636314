#include "igw/exact_solution.hpp"

#include <cmath>
#include <numbers>

namespace igw {

double dispersion_omega(double k, double m, const PhysicalParams& params) {
    const double k2 = k * k, m2 = m * m;
    return std::sqrt((params.N * params.N * k2 + params.f * params.f * m2) / (k2 + m2));
}

InvariantSolution::InvariantSolution(const InvariantSolutionSpec& spec, const PhysicalParams& params)
    : spec_(spec), params_(params) {
    spec_.validate();
    dA_[0] = spec_.A;
    dB_[0] = spec_.B;
    for (int i = 1; i < 4; ++i) {
        dA_[i] = dA_[i - 1].derivative();
        dB_[i] = dB_[i - 1].derivative();
    }
}

FlowJet InvariantSolution::at(double t, double x, double z) const {
    const double k = spec_.k, m = spec_.m, w = spec_.omega;
    const double lam = k * x + m * z;
    const double c = std::cos(w * t), s = std::sin(w * t);

    const double A = dA_[0].value(lam), A1 = dA_[1].value(lam), A2 = dA_[2].value(lam),
                 A3 = dA_[3].value(lam);
    const double B = dB_[0].value(lam), B1 = dB_[1].value(lam), B2 = dB_[2].value(lam),
                 B3 = dB_[3].value(lam);

    // Phase brackets: D_n = B^(n+1) c - A^(n+1) s drives v and rho,
    // E_n = A^(n+1) c + B^(n+1) s drives the psi gradients.
    const double D0 = B1 * c - A1 * s, D1 = B2 * c - A2 * s;
    const double E0 = A1 * c + B1 * s, E1 = A2 * c + B2 * s, E2 = A3 * c + B3 * s;

    const double cv = params_.f * m / w;
    const double cr = k * params_.N * params_.N / (params_.g * w);

    FlowJet j;
    j.psi = A * c + B * s;
    j.psi_t = w * (B * c - A * s);
    j.psi_x = k * E0;
    j.psi_z = m * E0;
    j.psi_xx = k * k * E1;
    j.psi_xz = k * m * E1;
    j.psi_zz = m * m * E1;
    j.psi_xt = k * w * D0;
    j.psi_zt = m * w * D0;
    j.psi_xxx = k * k * k * E2;
    j.psi_xxz = k * k * m * E2;
    j.psi_xzz = k * m * m * E2;
    j.psi_zzz = m * m * m * E2;
    j.psi_xxt = k * k * w * D1;
    j.psi_xzt = k * m * w * D1;
    j.psi_zzt = m * m * w * D1;

    j.v = cv * D0;
    j.v_t = -params_.f * m * E0;  // d/dt of cv*D0
    j.v_x = cv * k * D1;
    j.v_z = cv * m * D1;

    j.rho = cr * D0;
    j.rho_t = -k * params_.N * params_.N / params_.g * E0;
    j.rho_x = cr * k * D1;
    j.rho_z = cr * m * D1;
    return j;
}

void require_periodic_wavenumbers(const InvariantSolutionSpec& spec, const GridSpec& grid) {
    const double nx_waves = spec.k * grid.Lx / (2.0 * std::numbers::pi);
    const double nz_waves = spec.m * grid.Lz / (2.0 * std::numbers::pi);
    if (std::abs(nx_waves - std::round(nx_waves)) > 1e-9 ||
        std::abs(nz_waves - std::round(nz_waves)) > 1e-9)
        throw std::invalid_argument(
            "invariant_solution: (k Lx / 2pi, m Lz / 2pi) must be integers for a periodic wave");
}

FlowState invariant_solution(const InvariantSolutionSpec& spec, const PhysicalParams& params,
                             const GridSpec& grid, double t) {
    require_periodic_wavenumbers(spec, grid);
    InvariantSolution sol(spec, params);
    return sample_state(sol, grid, t);
}

Tendencies invariant_solution_tendencies(const InvariantSolutionSpec& spec,
                                         const PhysicalParams& params, const GridSpec& grid,
                                         double t) {
    require_periodic_wavenumbers(spec, grid);
    InvariantSolution sol(spec, params);
    return sample_time_derivatives(sol, grid, t);
}

ScalarField closed_form_semi_dilation_density(const InvariantSolutionSpec& spec,
                                              const PhysicalParams& params, const GridSpec& grid,
                                              double t) {
    spec.validate();
    const TrigPoly A1 = spec.A.derivative();
    const TrigPoly B1 = spec.B.derivative();
    const double k = spec.k, m = spec.m, w = spec.omega;
    const double c = std::cos(w * t), s = std::sin(w * t);
    const double f2m = params.f * params.f * m;
    const double N2k = params.N * params.N * k;
    return sample(grid, [&](double x, double z) {
        const double lam = k * x + m * z;
        const double D = B1.value(lam) * c - A1.value(lam) * s;
        const double E = A1.value(lam) * c + B1.value(lam) * s;
        return (f2m * x - N2k * z) * D / w - 0.5 * (k * k + m * m) * E * E;
    });
}

}  // namespace igw
