#include "igw/generators.hpp"

namespace igw {

const char* to_string(GenId id) {
    switch (id) {
        case GenId::X1: return "X1";
        case GenId::X2: return "X2";
        case GenId::X3: return "X3";
        case GenId::X4: return "X4";
        case GenId::X5: return "X5";
        case GenId::X6: return "X6";
        case GenId::X7: return "X7";
        case GenId::X8: return "X8";
        case GenId::X9: return "X9";
    }
    return "?";
}

GenId gen_id_from_string(const std::string& name) {
    for (int i = 0; i < 9; ++i) {
        const GenId id = static_cast<GenId>(i);
        if (name == to_string(id)) return id;
    }
    throw std::invalid_argument("unknown generator '" + name + "' (expected X1..X9)");
}

Generator make_generator(GenId id, const PhysicalParams& params, const TimeProfile& profile) {
    params.validate();
    Generator g;
    g.id = id;
    g.params = params;
    g.profile = profile;
    const double N2_g = params.N2_over_g();
    switch (id) {
        case GenId::X1:  // shift of v
            g.eta_v.c1 = TimeProfile::constant(1.0);
            break;
        case GenId::X2:  // shift of rho
            g.eta_rho.c1 = TimeProfile::constant(1.0);
            break;
        case GenId::X3:  // gauge shift psi -> psi + a(t)
            g.eta_psi.c1 = profile;
            break;
        case GenId::X4:  // time translation
            g.xi_t = TimeProfile::constant(1.0);
            break;
        case GenId::X5:  // time-dependent x translation
            g.xi_x.c1 = profile;
            g.eta_v.c1 = profile.scaled(-params.f);
            g.eta_psi.cz = profile.derivative();
            break;
        case GenId::X6:  // time-dependent z translation
            g.xi_z.c1 = profile;
            g.eta_rho.c1 = profile.scaled(N2_g);
            g.eta_psi.cx = profile.derivative().scaled(-1.0);
            break;
        case GenId::X7:  // space dilation
            g.xi_x.cx = TimeProfile::constant(1.0);
            g.xi_z.cz = TimeProfile::constant(1.0);
            g.lin_v.v = 1.0;
            g.lin_rho.rho = 1.0;
            g.lin_psi.psi = 2.0;
            break;
        case GenId::X8:  // semi-dilation
            g.xi_t = TimeProfile::polynomial({0.0, 1.0});
            g.xi_x.cx = TimeProfile::constant(2.0);
            g.xi_z.cz = TimeProfile::constant(2.0);
            g.lin_psi.psi = 3.0;
            g.eta_v.cx = TimeProfile::constant(-2.0 * params.f);
            g.eta_rho.cz = TimeProfile::constant(2.0 * N2_g);
            break;
        case GenId::X9:  // rotation coupled to an affine (v, rho) action
            if (params.f == 0.0)
                throw std::invalid_argument("X9 requires f != 0 (its coefficients contain 1/f)");
            g.xi_x.cz = TimeProfile::constant(1.0);
            g.xi_z.cx = TimeProfile::constant(-1.0);
            g.lin_v.rho = -params.g / params.f;
            g.eta_v.cz = TimeProfile::constant(-(params.f * params.f - params.N * params.N) / params.f);
            g.lin_rho.v = params.f / params.g;
            g.eta_rho.cx = TimeProfile::constant((params.f * params.f - params.N * params.N) / params.g);
            break;
    }
    return g;
}

Generator linear_combination(double a, const Generator& ga, double b, const Generator& gb) {
    Generator g;
    g.id = ga.id;
    g.params = ga.params;
    auto addp = [&](const TimeProfile& pa, const TimeProfile& pb) {
        return TimeProfile::sum(pa.scaled(a), pb.scaled(b));
    };
    auto addc = [&](const SpaceCoeff& ca, const SpaceCoeff& cb) {
        SpaceCoeff out;
        out.c1 = addp(ca.c1, cb.c1);
        out.cx = addp(ca.cx, cb.cx);
        out.cz = addp(ca.cz, cb.cz);
        return out;
    };
    g.xi_t = addp(ga.xi_t, gb.xi_t);
    g.xi_x = addc(ga.xi_x, gb.xi_x);
    g.xi_z = addc(ga.xi_z, gb.xi_z);
    g.eta_v = addc(ga.eta_v, gb.eta_v);
    g.eta_rho = addc(ga.eta_rho, gb.eta_rho);
    g.eta_psi = addc(ga.eta_psi, gb.eta_psi);
    g.lin_v = {a * ga.lin_v.v + b * gb.lin_v.v, a * ga.lin_v.rho + b * gb.lin_v.rho,
               a * ga.lin_v.psi + b * gb.lin_v.psi};
    g.lin_rho = {a * ga.lin_rho.v + b * gb.lin_rho.v, a * ga.lin_rho.rho + b * gb.lin_rho.rho,
                 a * ga.lin_rho.psi + b * gb.lin_rho.psi};
    g.lin_psi = {a * ga.lin_psi.v + b * gb.lin_psi.v, a * ga.lin_psi.rho + b * gb.lin_psi.rho,
                 a * ga.lin_psi.psi + b * gb.lin_psi.psi};
    return g;
}

}  // namespace igw
