#include "igw/conservation.hpp"

#include <cmath>
#include <numbers>

#include "igw/dynamics.hpp"
#include "igw/spectral.hpp"

namespace igw {

const char* to_string(LawId law) {
    switch (law) {
        case LawId::V_MEAN: return "v_mean";
        case LawId::RHO_MEAN: return "rho_mean";
        case LawId::ENERGY: return "energy";
        case LawId::SEMI_DILATION: return "semi_dilation";
        case LawId::ROTATION: return "rotation";
    }
    return "?";
}

CoordPolyField weighted_density(LawId law, const FlowState& s, const PhysicalParams& p) {
    const GridSpec& g = s.grid();
    CoordPolyField out(g);
    switch (law) {
        case LawId::V_MEAN:
            out.add(0, 0, s.v);
            break;
        case LawId::RHO_MEAN:
            out.add(0, 0, s.rho);
            break;
        case LawId::ENERGY:
            out.add(0, 0,
                    multiply_dealiased(s.v, s.v) + p.g2_over_N2() * multiply_dealiased(s.rho, s.rho) +
                        grad_norm_sq(s.psi));
            break;
        case LawId::SEMI_DILATION:
            out.add(1, 0, p.f * s.v);
            out.add(0, 1, -p.g * s.rho);
            out.add(0, 0, -0.5 * grad_norm_sq(s.psi));
            break;
        case LawId::ROTATION:
            out.add(0, 0, multiply_dealiased(s.v, s.rho));
            out.add(1, 0, p.f * s.rho);
            out.add(0, 1, -p.N2_over_g() * s.v);
            break;
    }
    return out;
}

ScalarField density(LawId law, const FlowState& s, const PhysicalParams& p) {
    return weighted_density(law, s, p).collapse();
}

namespace {

struct WeightedFlux {
    CoordPolyField fx, fz;
};

/// Flux components of the differential-form laws. The rotation-law
/// coordinate weights are the corrected ones (x paired with the x-flux,
/// z with the z-flux); the swapped pairing does not close the divergence.
WeightedFlux weighted_flux(LawId law, const FlowState& s, const Tendencies& td,
                           const PhysicalParams& p) {
    const GridSpec& g = s.grid();
    const ScalarField psi_x = ddx(s.psi), psi_z = ddz(s.psi);
    WeightedFlux out{CoordPolyField(g), CoordPolyField(g)};
    switch (law) {
        case LawId::V_MEAN:
            out.fx.add(0, 0, multiply_dealiased(s.v, psi_z));
            out.fz.add(0, 0, p.f * s.psi - multiply_dealiased(s.v, psi_x));
            break;
        case LawId::RHO_MEAN:
            out.fx.add(0, 0, p.N2_over_g() * s.psi + multiply_dealiased(s.rho, psi_z));
            out.fz.add(0, 0, -1.0 * multiply_dealiased(s.rho, psi_x));
            break;
        case LawId::ENERGY: {
            const ScalarField psi_xt = ddx(td.dpsi_dt), psi_zt = ddz(td.dpsi_dt);
            const ScalarField v2 = multiply_dealiased(s.v, s.v);
            const ScalarField r2 = multiply_dealiased(s.rho, s.rho);
            const ScalarField psi2 = multiply_dealiased(s.psi, s.psi);
            const ScalarField zeta_x = ddx(s.zeta), zeta_z = ddz(s.zeta);
            out.fx.add(0, 0,
                       2.0 * p.g * multiply_dealiased(s.rho, s.psi) + multiply_dealiased(v2, psi_z) +
                           p.g2_over_N2() * multiply_dealiased(r2, psi_z) -
                           2.0 * multiply_dealiased(s.psi, psi_xt) +
                           multiply_dealiased(psi2, zeta_z));
            out.fz.add(0, 0,
                       2.0 * p.f * multiply_dealiased(s.v, s.psi) - multiply_dealiased(v2, psi_x) -
                           p.g2_over_N2() * multiply_dealiased(r2, psi_x) -
                           2.0 * multiply_dealiased(s.psi, psi_zt) -
                           multiply_dealiased(psi2, zeta_x));
            break;
        }
        case LawId::SEMI_DILATION: {
            const ScalarField psi_xt = ddx(td.dpsi_dt), psi_zt = ddz(td.dpsi_dt);
            const ScalarField psi2 = multiply_dealiased(s.psi, s.psi);
            const ScalarField zeta_x = ddx(s.zeta), zeta_z = ddz(s.zeta);
            const ScalarField v_x = ddx(s.v), v_z = ddz(s.v);
            const ScalarField rho_x = ddx(s.rho), rho_z = ddz(s.rho);
            out.fx.add(0, 0,
                       multiply_dealiased(s.psi, psi_xt) - 0.5 * multiply_dealiased(psi2, zeta_z));
            out.fx.add(1, 0, -p.f * multiply_dealiased(s.psi, v_z));
            out.fx.add(0, 1, -p.N * p.N * s.psi + p.g * multiply_dealiased(s.psi, rho_z));
            out.fz.add(0, 0,
                       multiply_dealiased(s.psi, psi_zt) + 0.5 * multiply_dealiased(psi2, zeta_x));
            out.fz.add(1, 0, p.f * p.f * s.psi + p.f * multiply_dealiased(s.psi, v_x));
            out.fz.add(0, 1, -p.g * multiply_dealiased(s.psi, rho_x));
            break;
        }
        case LawId::ROTATION: {
            const ScalarField vrho = multiply_dealiased(s.v, s.rho);
            out.fx.add(0, 0, multiply_dealiased(vrho, psi_z));
            out.fx.add(1, 0, p.f * multiply_dealiased(s.rho, psi_z) + p.N2_over_g() * p.f * s.psi);
            out.fx.add(0, 1, -p.N2_over_g() * multiply_dealiased(s.v, psi_z));
            out.fz.add(0, 0, -1.0 * multiply_dealiased(vrho, psi_x));
            out.fz.add(1, 0, -p.f * multiply_dealiased(s.rho, psi_x));
            out.fz.add(0, 1, p.N2_over_g() * multiply_dealiased(s.v, psi_x) - p.N2_over_g() * p.f * s.psi);
            break;
        }
    }
    return out;
}

}  // namespace

DensityFluxSet flux(LawId law, const FlowState& s, const Tendencies& td, const PhysicalParams& p) {
    WeightedFlux wf = weighted_flux(law, s, td, p);
    DensityFluxSet out;
    out.density = density(law, s, p);
    out.flux_x = wf.fx.collapse();
    out.flux_z = wf.fz.collapse();
    return out;
}

CoordPolyField density_time_derivative(LawId law, const FlowState& s, const Tendencies& td,
                                       const PhysicalParams& p) {
    const GridSpec& g = s.grid();
    CoordPolyField out(g);
    switch (law) {
        case LawId::V_MEAN:
            out.add(0, 0, td.dv_dt);
            break;
        case LawId::RHO_MEAN:
            out.add(0, 0, td.drho_dt);
            break;
        case LawId::ENERGY: {
            const ScalarField psi_x = ddx(s.psi), psi_z = ddz(s.psi);
            const ScalarField psi_xt = ddx(td.dpsi_dt), psi_zt = ddz(td.dpsi_dt);
            out.add(0, 0,
                    2.0 * multiply_dealiased(s.v, td.dv_dt) +
                        2.0 * p.g2_over_N2() * multiply_dealiased(s.rho, td.drho_dt) +
                        2.0 * multiply_dealiased(psi_x, psi_xt) +
                        2.0 * multiply_dealiased(psi_z, psi_zt));
            break;
        }
        case LawId::SEMI_DILATION: {
            const ScalarField psi_x = ddx(s.psi), psi_z = ddz(s.psi);
            const ScalarField psi_xt = ddx(td.dpsi_dt), psi_zt = ddz(td.dpsi_dt);
            out.add(0, 0,
                    -1.0 * multiply_dealiased(psi_x, psi_xt) - multiply_dealiased(psi_z, psi_zt));
            out.add(1, 0, p.f * td.dv_dt);
            out.add(0, 1, -p.g * td.drho_dt);
            break;
        }
        case LawId::ROTATION:
            out.add(0, 0, multiply_dealiased(s.v, td.drho_dt) + multiply_dealiased(s.rho, td.dv_dt));
            out.add(1, 0, p.f * td.drho_dt);
            out.add(0, 1, -p.N2_over_g() * td.dv_dt);
            break;
    }
    return out;
}

DivergenceResidual divergence_residual(LawId law, const FlowState& s, const Tendencies& td,
                                       const PhysicalParams& p) {
    WeightedFlux wf = weighted_flux(law, s, td, p);
    CoordPolyField total = density_time_derivative(law, s, td, p);
    total += wf.fx.ddx();
    total += wf.fz.ddz();
    DivergenceResidual out;
    out.field = total.collapse();
    out.max_norm = out.field.max_abs();
    double acc = 0.0;
    for (double v : out.field.values()) acc += v * v;
    out.l2_norm = std::sqrt(acc * s.grid().dx() * s.grid().dz());
    return out;
}

DivergenceResidual divergence_residual_window(LawId law, std::span<const FlowState> window,
                                              const PhysicalParams& p) {
    if (window.size() < 3 || window.size() % 2 == 0)
        throw std::invalid_argument("divergence_residual_window: need an odd window of >= 3 states");
    const std::size_t c = window.size() / 2;
    const FlowState& s = window[c];
    for (std::size_t i = 0; i + 1 < window.size(); ++i) {
        if (window[i].grid() != s.grid())
            throw std::invalid_argument("divergence_residual_window: grid mismatch");
        if (!(window[i + 1].t > window[i].t))
            throw std::invalid_argument("divergence_residual_window: times must increase");
    }
    // centred difference of the stored densities (cross-check mode)
    const double dt = window[c + 1].t - window[c - 1].t;
    ScalarField ddt =
        (1.0 / dt) * (density(law, window[c + 1], p) - density(law, window[c - 1], p));
    // psi_xt, psi_zt in the fluxes still come from PDE-consistent
    // tendencies; only D_t(density) is snapshot-differenced here.
    Tendencies td = tendencies(s, p);
    WeightedFlux wf = weighted_flux(law, s, td, p);
    CoordPolyField total = CoordPolyField::plain(ddt);
    total += wf.fx.ddx();
    total += wf.fz.ddz();
    DivergenceResidual out;
    out.field = total.collapse();
    out.max_norm = out.field.max_abs();
    double acc = 0.0;
    for (double v : out.field.values()) acc += v * v;
    out.l2_norm = std::sqrt(acc * s.grid().dx() * s.grid().dz());
    return out;
}

namespace {

double edge_mean(const ScalarField& f) {
    const GridSpec& g = f.grid();
    double acc = 0.0;
    int n = 0;
    for (int i = 0; i < g.nx; ++i) {
        acc += f(i, 0) + f(i, g.nz - 1);
        n += 2;
    }
    for (int j = 1; j < g.nz - 1; ++j) {
        acc += f(0, j) + f(g.nx - 1, j);
        n += 2;
    }
    return acc / n;
}

/// The streamfunction is only defined up to a constant (zero-mean gauge),
/// so support is judged on its deviation from the boundary level.
ScalarField psi_anomaly(const ScalarField& psi) {
    const double c = edge_mean(psi);
    ScalarField out = psi;
    for (double& v : out.values()) v -= c;
    return out;
}

double edge_max(const ScalarField& f) {
    const GridSpec& g = f.grid();
    double edge = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        edge = std::max(edge, std::abs(f(i, 0)));
        edge = std::max(edge, std::abs(f(i, g.nz - 1)));
    }
    for (int j = 0; j < g.nz; ++j) {
        edge = std::max(edge, std::abs(f(0, j)));
        edge = std::max(edge, std::abs(f(g.nx - 1, j)));
    }
    return edge;
}

}  // namespace

bool compactly_supported(const FlowState& s) {
    const ScalarField psi = psi_anomaly(s.psi);
    const double interior = std::max({s.v.max_abs(), s.rho.max_abs(), psi.max_abs()});
    const double edge = std::max({edge_max(s.v), edge_max(s.rho), edge_max(psi)});
    return edge <= std::max(1e-12, 1e-9 * interior);
}

ConservedSet integral_invariants(const FlowState& s, const PhysicalParams& p) {
    ConservedSet out;
    out.t = s.t;
    for (std::size_t i = 0; i < kAllLaws.size(); ++i)
        out.I[i] = integrate(density(kAllLaws[i], s, p));
    out.supported = compactly_supported(s);
    return out;
}

double trust_horizon(const FlowState& s, const PhysicalParams& p) {
    const GridSpec& g = s.grid();
    const ScalarField psi = psi_anomaly(s.psi);
    const double scale = std::max({s.v.max_abs(), s.rho.max_abs(), psi.max_abs()});
    if (scale == 0.0) return std::numeric_limits<double>::infinity();
    const double threshold = 1e-9 * scale;
    // distance from any above-threshold sample to the boundary
    double margin = std::min(g.Lx, g.Lz) / 2.0;
    auto scan = [&](const ScalarField& f) {
        for (int i = 0; i < g.nx; ++i)
            for (int j = 0; j < g.nz; ++j) {
                if (std::abs(f(i, j)) <= threshold) continue;
                const double dxb = g.Lx / 2.0 - std::abs(g.x(i));
                const double dzb = g.Lz / 2.0 - std::abs(g.z(j));
                margin = std::min(margin, std::min(dxb, dzb));
            }
    };
    scan(s.v);
    scan(s.rho);
    scan(psi);
    const double k_min = 2.0 * std::numbers::pi / std::max(g.Lx, g.Lz);
    const double wave_speed = std::max(p.N, std::abs(p.f)) / k_min;
    const double advect = std::max(ddx(s.psi).max_abs(), ddz(s.psi).max_abs());
    return margin / (wave_speed + advect);
}

DriftReport drift_report(const std::vector<ConservedSet>& series) {
    if (series.empty()) throw std::invalid_argument("drift_report: empty trajectory");
    DriftReport out;
    const auto& I0 = series.front().I;
    const double energy0 = std::abs(I0[2]);
    for (int k = 0; k < 5; ++k) {
        double scale = std::abs(I0[k]);
        if (scale < 1e-12 * energy0 || scale == 0.0) scale = std::max(energy0, 1e-300);
        out.scale[k] = scale;
        double worst = 0.0;
        for (const auto& cs : series) worst = std::max(worst, std::abs(cs.I[k] - I0[k]));
        out.drift[k] = worst / scale;
    }
    return out;
}

double jacobian_identity_residual(int which, const ScalarField& v, const ScalarField& rho,
                                  const ScalarField& psi) {
    v.check_same_grid(rho);
    v.check_same_grid(psi);
    const GridSpec& g = v.grid();
    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    const ScalarField psi_x = ddx(psi), psi_z = ddz(psi);
    switch (which) {
        case 1: {
            ScalarField lhs = multiply_dealiased(v, jacobian(psi, rho)) +
                              multiply_dealiased(rho, jacobian(psi, v));
            ScalarField vrho = multiply_dealiased(v, rho);
            ScalarField rhs =
                ddz(multiply_dealiased(vrho, psi_x)) - ddx(multiply_dealiased(vrho, psi_z));
            return max_abs_diff(lhs, rhs);
        }
        case 2: {
            ScalarField rpx = multiply_dealiased(rho, psi_x);
            ScalarField rpz = multiply_dealiased(rho, psi_z);
            ScalarField lhs = pointwise(x, jacobian(psi, rho)) - rpz;
            // Dz(x rho psi_x) = x Dz(rho psi_x); Dx(x rho psi_z) = rho psi_z + x Dx(rho psi_z)
            ScalarField rhs = pointwise(x, ddz(rpx)) - rpz - pointwise(x, ddx(rpz));
            return max_abs_diff(lhs, rhs);
        }
        case 3: {
            ScalarField vpx = multiply_dealiased(v, psi_x);
            ScalarField vpz = multiply_dealiased(v, psi_z);
            ScalarField lhs = pointwise(z, jacobian(psi, v)) + vpx;
            // corrected orientation: Dz(z v psi_x) - Dx(z v psi_z)
            ScalarField rhs = vpx + pointwise(z, ddz(vpx)) - pointwise(z, ddx(vpz));
            return max_abs_diff(lhs, rhs);
        }
        case 4: {
            ScalarField lhs = pointwise(z, psi_z) - pointwise(x, psi_x);
            ScalarField rhs = psi + pointwise(z, ddz(psi)) - psi - pointwise(x, ddx(psi));
            return max_abs_diff(lhs, rhs);
        }
    }
    throw std::invalid_argument("jacobian_identity_residual: which must be 1..4");
}

double rotation_density_assembly_residual(const FlowState& s, const Tendencies& td,
                                          const PhysicalParams& p) {
    const GridSpec& g = s.grid();
    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    // product-rule D_t(Q) from the given tendencies
    ScalarField lhs = multiply_dealiased(s.v, td.drho_dt) + multiply_dealiased(s.rho, td.dv_dt) +
                      p.f * pointwise(x, td.drho_dt) - p.N2_over_g() * pointwise(z, td.dv_dt);
    // Jacobian-bracket form with independently recomputed brackets
    ScalarField Ev = jacobian(s.psi, s.v) - p.f * ddz(s.psi);
    ScalarField Er = jacobian(s.psi, s.rho) - p.N2_over_g() * ddx(s.psi);
    ScalarField rhs = multiply_dealiased(s.v, Er) + multiply_dealiased(s.rho, Ev) +
                      p.f * pointwise(x, Er) - p.N2_over_g() * pointwise(z, Ev);
    return max_abs_diff(lhs, rhs);
}

double semi_dilation_reduction_residual(const FlowState& s, const PhysicalParams& p) {
    // reduced raw density, transcribed independently with plain products
    const GridSpec& g = s.grid();
    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    const ScalarField gsq = grad_norm_sq(s.psi);
    ScalarField reduced = 2.0 * (p.f * pointwise(x, s.v) - p.g * pointwise(z, s.rho)) - gsq;
    reduced -= 2.0 * (multiply_dealiased(s.v, s.v) + p.g2_over_N2() * multiply_dealiased(s.rho, s.rho) +
                      gsq);
    ScalarField via_densities =
        2.0 * density(LawId::SEMI_DILATION, s, p) - 2.0 * density(LawId::ENERGY, s, p);
    return max_abs_diff(reduced, via_densities);
}

}  // namespace igw
