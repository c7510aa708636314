#include "igw/jet.hpp"

#include <cmath>

namespace igw {

double max_residual_on_grid(const SolutionSampler& sol, const GridSpec& grid, double t,
                            const PhysicalParams& params) {
    double m = 0.0;
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.nz; ++j) {
            const auto r = residual_at(sol.at(t, grid.x(i), grid.z(j)), params);
            m = std::max({m, std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
        }
    return m;
}

FlowState sample_state(const SolutionSampler& sol, const GridSpec& grid, double t) {
    ScalarField v(grid), rho(grid), psi(grid);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.nz; ++j) {
            const FlowJet jet = sol.at(t, grid.x(i), grid.z(j));
            v(i, j) = jet.v;
            rho(i, j) = jet.rho;
            psi(i, j) = jet.psi;
        }
    return FlowState::from_psi(t, std::move(v), std::move(rho), psi);
}

Tendencies sample_time_derivatives(const SolutionSampler& sol, const GridSpec& grid, double t) {
    ScalarField vt(grid), rt(grid), pt(grid);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.nz; ++j) {
            const FlowJet jet = sol.at(t, grid.x(i), grid.z(j));
            vt(i, j) = jet.v_t;
            rt(i, j) = jet.rho_t;
            pt(i, j) = jet.psi_t;
        }
    Tendencies out;
    out.dv_dt = std::move(vt);
    out.drho_dt = std::move(rt);
    out.dpsi_dt = remove_mean(pt);
    out.dzeta_dt = laplacian(out.dpsi_dt);
    return out;
}

}  // namespace igw
