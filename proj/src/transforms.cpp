#include "igw/transforms.hpp"

#include <cmath>

#include "igw/dynamics.hpp"

namespace igw {

namespace {

struct Vec2 {
    double x, z;
};

/// Rotation of symmetric derivative tensors: component picked by the number
/// of z-indices.
double rot2(double axx, double axz, double azz, Vec2 ea, Vec2 eb) {
    return ea.x * eb.x * axx + (ea.x * eb.z + ea.z * eb.x) * axz + ea.z * eb.z * azz;
}

double rot3(double a0, double a1, double a2, double a3, Vec2 ea, Vec2 eb, Vec2 ec) {
    // a_n = derivative with n z-indices (xxx, xxz, xzz, zzz)
    const double cs[2][3] = {{ea.x, eb.x, ec.x}, {ea.z, eb.z, ec.z}};
    const double comp[4] = {a0, a1, a2, a3};
    double acc = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) acc += cs[i][0] * cs[j][1] * cs[k][2] * comp[i + j + k];
    return acc;
}

struct Mat2 {
    double a00 = 1, a01 = 0, a10 = 0, a11 = 1;
    Vec2 apply(Vec2 v) const { return {a00 * v.x + a01 * v.z, a10 * v.x + a11 * v.z}; }
};

/// Fundamental matrices of the X9 fibre flow
///   d/de [v; rho] = A [v; rho] + B R(e) [x0; z0],
/// integrated once per transform: v(e) = Phi(e) v0 + G(e) [x0; z0].
struct RotationFlow {
    Mat2 Phi;
    Mat2 G{0, 0, 0, 0};
};

RotationFlow integrate_rotation_flow(double eps, const PhysicalParams& p) {
    const double A01 = -p.g / p.f, A10 = p.f / p.g;
    const double q = p.f * p.f - p.N * p.N;
    const double B01 = -q / p.f, B10 = q / p.g;

    // state y = (Phi, G) as 8 doubles; dPhi = A Phi, dG = A G + B R(e)
    std::array<double, 8> y = {1, 0, 0, 1, 0, 0, 0, 0};
    auto deriv = [&](double e, const std::array<double, 8>& s) {
        const double c = std::cos(e), sn = std::sin(e);
        std::array<double, 8> d;
        // Phi rows
        d[0] = A01 * s[2];
        d[1] = A01 * s[3];
        d[2] = A10 * s[0];
        d[3] = A10 * s[1];
        // G rows; R(e) = [[c, sn], [-sn, c]]
        d[4] = A01 * s[6] + B01 * (-sn);
        d[5] = A01 * s[7] + B01 * c;
        d[6] = A10 * s[4] + B10 * c;
        d[7] = A10 * s[5] + B10 * sn;
        return d;
    };

    const int n = std::max<int>(16, static_cast<int>(std::ceil(std::abs(eps) / 1e-3)));
    const double h = eps / n;
    double e = 0.0;
    for (int step = 0; step < n; ++step) {
        const auto k1 = deriv(e, y);
        std::array<double, 8> y2, y3, y4;
        for (int i = 0; i < 8; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
        const auto k2 = deriv(e + 0.5 * h, y2);
        for (int i = 0; i < 8; ++i) y3[i] = y[i] + 0.5 * h * k2[i];
        const auto k3 = deriv(e + 0.5 * h, y3);
        for (int i = 0; i < 8; ++i) y4[i] = y[i] + h * k3[i];
        const auto k4 = deriv(e + h, y4);
        for (int i = 0; i < 8; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        e += h;
    }
    RotationFlow out;
    out.Phi = {y[0], y[1], y[2], y[3]};
    out.G = {y[4], y[5], y[6], y[7]};
    return out;
}

class TransformedSampler final : public SolutionSampler {
  public:
    TransformedSampler(Generator gen, double eps, SamplerPtr base)
        : gen_(std::move(gen)), eps_(eps), base_(std::move(base)) {
        if (gen_.id == GenId::X9) flow_ = integrate_rotation_flow(eps_, gen_.params);
    }

    FlowJet at(double T, double X, double Z) const override {
        switch (gen_.id) {
            case GenId::X1: {
                FlowJet j = base_->at(T, X, Z);
                j.v += eps_;
                return j;
            }
            case GenId::X2: {
                FlowJet j = base_->at(T, X, Z);
                j.rho += eps_;
                return j;
            }
            case GenId::X3: {
                FlowJet j = base_->at(T, X, Z);
                j.psi += eps_ * gen_.profile.value(T);
                j.psi_t += eps_ * gen_.profile.derivative().value(T);
                return j;
            }
            case GenId::X4:
                return base_->at(T - eps_, X, Z);
            case GenId::X5: return x5(T, X, Z);
            case GenId::X6: return x6(T, X, Z);
            case GenId::X7: return x7(T, X, Z);
            case GenId::X8: return x8(T, X, Z);
            case GenId::X9: return x9(T, X, Z);
        }
        throw std::logic_error("unreachable");
    }

  private:
    FlowJet x5(double T, double X, double Z) const {
        const double f = gen_.params.f;
        const double b0 = gen_.profile.value(T);
        const double b1 = gen_.profile.derivative().value(T);
        const double b2 = gen_.profile.derivative().derivative().value(T);
        FlowJet j = base_->at(T, X - eps_ * b0, Z);
        FlowJet o = j;
        o.v = j.v - eps_ * f * b0;
        o.v_t = j.v_t - eps_ * b1 * j.v_x - eps_ * f * b1;
        o.rho_t = j.rho_t - eps_ * b1 * j.rho_x;
        o.psi = j.psi + eps_ * b1 * Z;
        o.psi_t = j.psi_t - eps_ * b1 * j.psi_x + eps_ * b2 * Z;
        o.psi_z = j.psi_z + eps_ * b1;
        o.psi_xt = j.psi_xt - eps_ * b1 * j.psi_xx;
        o.psi_zt = j.psi_zt - eps_ * b1 * j.psi_xz + eps_ * b2;
        o.psi_xxt = j.psi_xxt - eps_ * b1 * j.psi_xxx;
        o.psi_xzt = j.psi_xzt - eps_ * b1 * j.psi_xxz;
        o.psi_zzt = j.psi_zzt - eps_ * b1 * j.psi_xzz;
        return o;
    }

    FlowJet x6(double T, double X, double Z) const {
        const double n2g = gen_.params.N2_over_g();
        const double c0 = gen_.profile.value(T);
        const double c1 = gen_.profile.derivative().value(T);
        const double c2 = gen_.profile.derivative().derivative().value(T);
        FlowJet j = base_->at(T, X, Z - eps_ * c0);
        FlowJet o = j;
        o.v_t = j.v_t - eps_ * c1 * j.v_z;
        o.rho = j.rho + eps_ * n2g * c0;
        o.rho_t = j.rho_t - eps_ * c1 * j.rho_z + eps_ * n2g * c1;
        o.psi = j.psi - eps_ * c1 * X;
        o.psi_t = j.psi_t - eps_ * c1 * j.psi_z - eps_ * c2 * X;
        o.psi_x = j.psi_x - eps_ * c1;
        o.psi_xt = j.psi_xt - eps_ * c1 * j.psi_xz - eps_ * c2;
        o.psi_zt = j.psi_zt - eps_ * c1 * j.psi_zz;
        o.psi_xxt = j.psi_xxt - eps_ * c1 * j.psi_xxz;
        o.psi_xzt = j.psi_xzt - eps_ * c1 * j.psi_xzz;
        o.psi_zzt = j.psi_zzt - eps_ * c1 * j.psi_zzz;
        return o;
    }

    FlowJet x7(double T, double X, double Z) const {
        const double s = std::exp(eps_);
        FlowJet j = base_->at(T, X / s, Z / s);
        FlowJet o;
        o.v = s * j.v;
        o.v_t = s * j.v_t;
        o.v_x = j.v_x;
        o.v_z = j.v_z;
        o.rho = s * j.rho;
        o.rho_t = s * j.rho_t;
        o.rho_x = j.rho_x;
        o.rho_z = j.rho_z;
        o.psi = s * s * j.psi;
        o.psi_t = s * s * j.psi_t;
        o.psi_x = s * j.psi_x;
        o.psi_z = s * j.psi_z;
        o.psi_xx = j.psi_xx;
        o.psi_xz = j.psi_xz;
        o.psi_zz = j.psi_zz;
        o.psi_xt = s * j.psi_xt;
        o.psi_zt = s * j.psi_zt;
        o.psi_xxx = j.psi_xxx / s;
        o.psi_xxz = j.psi_xxz / s;
        o.psi_xzz = j.psi_xzz / s;
        o.psi_zzz = j.psi_zzz / s;
        o.psi_xxt = j.psi_xxt;
        o.psi_xzt = j.psi_xzt;
        o.psi_zzt = j.psi_zzt;
        return o;
    }

    FlowJet x8(double T, double X, double Z) const {
        const double f = gen_.params.f;
        const double n2g = gen_.params.N2_over_g();
        const double e1 = std::exp(eps_), e2 = e1 * e1, e3 = e2 * e1;
        const double at = 1.0 / e1, ax = 1.0 / e2;  // preimage contraction factors
        const double x = X * ax, z = Z * ax;
        FlowJet j = base_->at(T * at, x, z);
        FlowJet o;
        o.v = j.v + f * x * (1.0 - e2);
        o.v_t = at * j.v_t;
        o.v_x = ax * (j.v_x + f * (1.0 - e2));
        o.v_z = ax * j.v_z;
        o.rho = j.rho + n2g * z * (e2 - 1.0);
        o.rho_t = at * j.rho_t;
        o.rho_x = ax * j.rho_x;
        o.rho_z = ax * (j.rho_z + n2g * (e2 - 1.0));
        o.psi = e3 * j.psi;
        o.psi_t = e2 * j.psi_t;
        o.psi_x = e1 * j.psi_x;
        o.psi_z = e1 * j.psi_z;
        o.psi_xx = at * j.psi_xx;
        o.psi_xz = at * j.psi_xz;
        o.psi_zz = at * j.psi_zz;
        o.psi_xt = j.psi_xt;
        o.psi_zt = j.psi_zt;
        o.psi_xxx = j.psi_xxx / e3;
        o.psi_xxz = j.psi_xxz / e3;
        o.psi_xzz = j.psi_xzz / e3;
        o.psi_zzz = j.psi_zzz / e3;
        o.psi_xxt = ax * j.psi_xxt;
        o.psi_xzt = ax * j.psi_xzt;
        o.psi_zzt = ax * j.psi_zzt;
        return o;
    }

    FlowJet x9(double T, double X, double Z) const {
        const double c = std::cos(eps_), s = std::sin(eps_);
        // preimage: rotate the query back
        const double x = c * X - s * Z;
        const double z = s * X + c * Z;
        const Vec2 eX{c, s}, eZ{-s, c};  // d(preimage)/d(query)
        FlowJet j = base_->at(T, x, z);
        const Mat2& P = flow_.Phi;
        const Mat2& G = flow_.G;

        FlowJet o;
        o.v = P.a00 * j.v + P.a01 * j.rho + G.a00 * x + G.a01 * z;
        o.rho = P.a10 * j.v + P.a11 * j.rho + G.a10 * x + G.a11 * z;
        o.v_t = P.a00 * j.v_t + P.a01 * j.rho_t;
        o.rho_t = P.a10 * j.v_t + P.a11 * j.rho_t;

        const double vX = eX.x * j.v_x + eX.z * j.v_z, vZ = eZ.x * j.v_x + eZ.z * j.v_z;
        const double rX = eX.x * j.rho_x + eX.z * j.rho_z, rZ = eZ.x * j.rho_x + eZ.z * j.rho_z;
        o.v_x = P.a00 * vX + P.a01 * rX + G.a00 * eX.x + G.a01 * eX.z;
        o.v_z = P.a00 * vZ + P.a01 * rZ + G.a00 * eZ.x + G.a01 * eZ.z;
        o.rho_x = P.a10 * vX + P.a11 * rX + G.a10 * eX.x + G.a11 * eX.z;
        o.rho_z = P.a10 * vZ + P.a11 * rZ + G.a10 * eZ.x + G.a11 * eZ.z;

        o.psi = j.psi;
        o.psi_t = j.psi_t;
        o.psi_x = eX.x * j.psi_x + eX.z * j.psi_z;
        o.psi_z = eZ.x * j.psi_x + eZ.z * j.psi_z;
        o.psi_xx = rot2(j.psi_xx, j.psi_xz, j.psi_zz, eX, eX);
        o.psi_xz = rot2(j.psi_xx, j.psi_xz, j.psi_zz, eX, eZ);
        o.psi_zz = rot2(j.psi_xx, j.psi_xz, j.psi_zz, eZ, eZ);
        o.psi_xt = eX.x * j.psi_xt + eX.z * j.psi_zt;
        o.psi_zt = eZ.x * j.psi_xt + eZ.z * j.psi_zt;
        o.psi_xxx = rot3(j.psi_xxx, j.psi_xxz, j.psi_xzz, j.psi_zzz, eX, eX, eX);
        o.psi_xxz = rot3(j.psi_xxx, j.psi_xxz, j.psi_xzz, j.psi_zzz, eX, eX, eZ);
        o.psi_xzz = rot3(j.psi_xxx, j.psi_xxz, j.psi_xzz, j.psi_zzz, eX, eZ, eZ);
        o.psi_zzz = rot3(j.psi_xxx, j.psi_xxz, j.psi_xzz, j.psi_zzz, eZ, eZ, eZ);
        o.psi_xxt = rot2(j.psi_xxt, j.psi_xzt, j.psi_zzt, eX, eX);
        o.psi_xzt = rot2(j.psi_xxt, j.psi_xzt, j.psi_zzt, eX, eZ);
        o.psi_zzt = rot2(j.psi_xxt, j.psi_xzt, j.psi_zzt, eZ, eZ);
        return o;
    }

    Generator gen_;
    double eps_;
    SamplerPtr base_;
    RotationFlow flow_;
};

}  // namespace

SamplerPtr finite_transform(const Generator& gen, double eps, SamplerPtr sol) {
    if (gen.id == GenId::X9 && gen.params.f == 0.0)
        throw std::invalid_argument("X9 finite transform requires f != 0");
    return std::make_shared<TransformedSampler>(gen, eps, std::move(sol));
}

namespace {
double jet_value_distance(const FlowJet& a, const FlowJet& b) {
    return std::max({std::abs(a.v - b.v), std::abs(a.rho - b.rho), std::abs(a.psi - b.psi)});
}
}  // namespace

double group_law_residual(const Generator& gen, double e1, double e2, SamplerPtr sol,
                          const std::vector<std::array<double, 3>>& points) {
    SamplerPtr two = finite_transform(gen, e1, finite_transform(gen, e2, sol));
    SamplerPtr one = finite_transform(gen, e1 + e2, sol);
    double worst = 0.0;
    for (const auto& p : points)
        worst = std::max(worst, jet_value_distance(two->at(p[0], p[1], p[2]), one->at(p[0], p[1], p[2])));
    return worst;
}

double round_trip_residual(const Generator& gen, double eps, SamplerPtr sol,
                           const std::vector<std::array<double, 3>>& points) {
    SamplerPtr back = finite_transform(gen, -eps, finite_transform(gen, eps, sol));
    double worst = 0.0;
    for (const auto& p : points)
        worst = std::max(worst, jet_value_distance(back->at(p[0], p[1], p[2]), sol->at(p[0], p[1], p[2])));
    return worst;
}

SolutionMapReport solution_map_check(const Generator& gen, double eps,
                                     const InvariantSolutionSpec& spec, const PhysicalParams& params,
                                     const GridSpec& grid, const std::vector<double>& times) {
    auto base = std::make_shared<InvariantSolution>(spec, params);
    SamplerPtr mapped = finite_transform(gen, eps, base);
    SolutionMapReport rep;
    rep.id = gen.id;
    rep.eps = eps;
    for (double t : times)
        rep.max_residual = std::max(rep.max_residual, max_residual_on_grid(*mapped, grid, t, params));
    return rep;
}

double linearized_map_residual(const Generator& gen, const InvariantSolutionSpec& spec,
                               const PhysicalParams& params, const GridSpec& grid, double t,
                               double eps) {
    if (!gen.xi_t.is_zero())
        throw std::invalid_argument("linearized_map_residual: only generators with xi_t = 0");
    require_periodic_wavenumbers(spec, grid);
    FlowState state = invariant_solution(spec, params, grid, t);
    Tendencies tend = invariant_solution_tendencies(spec, params, grid, t);

    const CharacteristicTriple W = characteristics(gen, state, tend);

    // dW/dt for time-independent coefficients: the same characteristic
    // structure applied to the time-derivative fields. The explicit
    // eta(t,x,z) parts are constants in time here, so they drop out.
    FlowState dstate = state;
    dstate.v = tend.dv_dt;
    dstate.rho = tend.drho_dt;
    dstate.psi = tend.dpsi_dt;
    dstate.zeta = tend.dzeta_dt;
    // second time derivatives do not enter (xi_t = 0): pass zeros
    Tendencies zero;
    zero.dv_dt = ScalarField(grid);
    zero.drho_dt = ScalarField(grid);
    zero.dzeta_dt = ScalarField(grid);
    zero.dpsi_dt = ScalarField(grid);
    Generator dgen = gen;
    dgen.eta_v = SpaceCoeff{};
    dgen.eta_rho = SpaceCoeff{};
    dgen.eta_psi = SpaceCoeff{};
    const CharacteristicTriple Wt = characteristics(dgen, dstate, zero);

    auto perturbed = [&](const ScalarField& u, const CoordPolyField& w) {
        CoordPolyField out = CoordPolyField::plain(u);
        out += eps * w;
        return out;
    };
    const CoordPolyField v = perturbed(state.v, W.W1);
    const CoordPolyField rho = perturbed(state.rho, W.W2);
    const CoordPolyField psi = perturbed(state.psi, W.W3);
    const CoordPolyField v_t = perturbed(tend.dv_dt, Wt.W1);
    const CoordPolyField rho_t = perturbed(tend.drho_dt, Wt.W2);
    const CoordPolyField psi_t = perturbed(tend.dpsi_dt, Wt.W3);

    const PhysicalParams& p = params;
    CoordPolyField r1 = psi_t.laplacian() - p.g * rho.ddx() - p.f * v.ddz() -
                        cp_jacobian(psi, psi.laplacian());
    CoordPolyField r2 = v_t + p.f * psi.ddz() - cp_jacobian(psi, v);
    CoordPolyField r3 = rho_t + p.N2_over_g() * psi.ddx() - cp_jacobian(psi, rho);
    return std::max({r1.collapse().max_abs(), r2.collapse().max_abs(), r3.collapse().max_abs()});
}

// ---------------------------------------------------------------------------
// TrajectorySampler

struct TrajectorySampler::Node {
    // value components and the matching time-derivative fields (slopes)
    ScalarField v, v_x, v_z, dv, dv_x, dv_z;
    ScalarField rho, rho_x, rho_z, drho, drho_x, drho_z;
    // psi derivatives to third order, and the same derivatives of dpsi
    ScalarField p, p_x, p_z, p_xx, p_xz, p_zz, p_xxx, p_xxz, p_xzz, p_zzz;
    ScalarField dp, dp_x, dp_z, dp_xx, dp_xz, dp_zz, dp_xxx, dp_xxz, dp_xzz, dp_zzz;
};

TrajectorySampler::~TrajectorySampler() = default;

TrajectorySampler::TrajectorySampler(std::vector<FlowState> states,
                                     std::vector<Tendencies> tendencies) {
    if (states.size() < 2 || states.size() != tendencies.size())
        throw std::invalid_argument("TrajectorySampler: need >= 2 snapshots with tendencies");
    for (std::size_t i = 0; i + 1 < states.size(); ++i)
        if (!(states[i + 1].t > states[i].t))
            throw std::invalid_argument("TrajectorySampler: snapshot times must increase");

    for (std::size_t i = 0; i < states.size(); ++i) {
        const FlowState& s = states[i];
        const Tendencies& td = tendencies[i];
        times_.push_back(s.t);
        Node n;
        n.v = s.v;
        n.v_x = ddx(s.v);
        n.v_z = ddz(s.v);
        n.dv = td.dv_dt;
        n.dv_x = ddx(td.dv_dt);
        n.dv_z = ddz(td.dv_dt);
        n.rho = s.rho;
        n.rho_x = ddx(s.rho);
        n.rho_z = ddz(s.rho);
        n.drho = td.drho_dt;
        n.drho_x = ddx(td.drho_dt);
        n.drho_z = ddz(td.drho_dt);
        n.p = s.psi;
        n.p_x = ddx(s.psi);
        n.p_z = ddz(s.psi);
        n.p_xx = ddx(n.p_x);
        n.p_xz = ddz(n.p_x);
        n.p_zz = ddz(n.p_z);
        n.p_xxx = ddx(n.p_xx);
        n.p_xxz = ddz(n.p_xx);
        n.p_xzz = ddz(n.p_xz);
        n.p_zzz = ddz(n.p_zz);
        n.dp = td.dpsi_dt;
        n.dp_x = ddx(td.dpsi_dt);
        n.dp_z = ddz(td.dpsi_dt);
        n.dp_xx = ddx(n.dp_x);
        n.dp_xz = ddz(n.dp_x);
        n.dp_zz = ddz(n.dp_z);
        n.dp_xxx = ddx(n.dp_xx);
        n.dp_xxz = ddz(n.dp_xx);
        n.dp_xzz = ddz(n.dp_xz);
        n.dp_zzz = ddz(n.dp_zz);
        nodes_.push_back(std::move(n));
    }
}

FlowJet TrajectorySampler::at(double t, double x, double z) const {
    const double lo = times_.front(), hi = times_.back();
    if (t < lo - 1e-12 || t > hi + 1e-12)
        throw std::out_of_range("TrajectorySampler: time " + std::to_string(t) +
                                " outside stored range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    std::size_t i = 0;
    while (i + 2 < times_.size() && times_[i + 1] <= t) ++i;
    const double h = times_[i + 1] - times_[i];
    const double u = std::clamp((t - times_[i]) / h, 0.0, 1.0);

    // cubic Hermite basis and its exact time derivative
    const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
    const double h10 = u * (1 - u) * (1 - u);
    const double h01 = u * u * (3 - 2 * u);
    const double h11 = u * u * (u - 1);
    const double g00 = 6 * u * (u - 1) / h;
    const double g10 = (3 * u - 1) * (u - 1);
    const double g01 = -6 * u * (u - 1) / h;
    const double g11 = u * (3 * u - 2);

    const Node& a = nodes_[i];
    const Node& b = nodes_[i + 1];
    auto val = [&](const ScalarField& fa, const ScalarField& da, const ScalarField& fb,
                   const ScalarField& db) {
        return h00 * spectral_eval(fa, x, z) + h * h10 * spectral_eval(da, x, z) +
               h01 * spectral_eval(fb, x, z) + h * h11 * spectral_eval(db, x, z);
    };
    auto dval = [&](const ScalarField& fa, const ScalarField& da, const ScalarField& fb,
                    const ScalarField& db) {
        return g00 * spectral_eval(fa, x, z) + g10 * spectral_eval(da, x, z) +
               g01 * spectral_eval(fb, x, z) + g11 * spectral_eval(db, x, z);
    };

    FlowJet j;
    j.v = val(a.v, a.dv, b.v, b.dv);
    j.v_t = dval(a.v, a.dv, b.v, b.dv);
    j.v_x = val(a.v_x, a.dv_x, b.v_x, b.dv_x);
    j.v_z = val(a.v_z, a.dv_z, b.v_z, b.dv_z);
    j.rho = val(a.rho, a.drho, b.rho, b.drho);
    j.rho_t = dval(a.rho, a.drho, b.rho, b.drho);
    j.rho_x = val(a.rho_x, a.drho_x, b.rho_x, b.drho_x);
    j.rho_z = val(a.rho_z, a.drho_z, b.rho_z, b.drho_z);
    j.psi = val(a.p, a.dp, b.p, b.dp);
    j.psi_t = dval(a.p, a.dp, b.p, b.dp);
    j.psi_x = val(a.p_x, a.dp_x, b.p_x, b.dp_x);
    j.psi_z = val(a.p_z, a.dp_z, b.p_z, b.dp_z);
    j.psi_xx = val(a.p_xx, a.dp_xx, b.p_xx, b.dp_xx);
    j.psi_xz = val(a.p_xz, a.dp_xz, b.p_xz, b.dp_xz);
    j.psi_zz = val(a.p_zz, a.dp_zz, b.p_zz, b.dp_zz);
    j.psi_xt = dval(a.p_x, a.dp_x, b.p_x, b.dp_x);
    j.psi_zt = dval(a.p_z, a.dp_z, b.p_z, b.dp_z);
    j.psi_xxx = val(a.p_xxx, a.dp_xxx, b.p_xxx, b.dp_xxx);
    j.psi_xxz = val(a.p_xxz, a.dp_xxz, b.p_xxz, b.dp_xxz);
    j.psi_xzz = val(a.p_xzz, a.dp_xzz, b.p_xzz, b.dp_xzz);
    j.psi_zzz = val(a.p_zzz, a.dp_zzz, b.p_zzz, b.dp_zzz);
    j.psi_xxt = dval(a.p_xx, a.dp_xx, b.p_xx, b.dp_xx);
    j.psi_xzt = dval(a.p_xz, a.dp_xz, b.p_xz, b.dp_xz);
    j.psi_zzt = dval(a.p_zz, a.dp_zz, b.p_zz, b.dp_zz);
    return j;
}

}  // namespace igw
