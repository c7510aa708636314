#include <doctest.h>

#include <cmath>
#include <numbers>

#include "igw/characteristics.hpp"
#include "igw/dynamics.hpp"
#include "igw/exact_solution.hpp"
#include "igw/generators.hpp"
#include "igw/transforms.hpp"

using namespace igw;

namespace {

constexpr double kPi = std::numbers::pi;

GridSpec box(int n) { return GridSpec(n, n, 2.0 * kPi, 2.0 * kPi); }

PhysicalParams lab_params() { return PhysicalParams(1.0, 2.0, 9.8); }

FlowState random_state(const GridSpec& g, std::uint64_t seed, double amp, double t = 0.0) {
    ScalarField v = random_band_limited(g, 12, amp, seed);
    ScalarField rho = random_band_limited(g, 12, amp, seed + 1);
    ScalarField psi = random_band_limited(g, 12, amp, seed + 2);
    FlowState s = FlowState::from_psi(t, std::move(v), std::move(rho), psi);
    return s;
}

InvariantSolutionSpec wave_spec(const PhysicalParams& p) {
    InvariantSolutionSpec s;
    s.k = 1.0;
    s.m = 2.0;
    s.omega = dispersion_omega(s.k, s.m, p);
    s.A = TrigPoly::sin_wave(1.0);
    s.B = TrigPoly::cos_wave(0.5);
    return s;
}

std::vector<std::array<double, 3>> sample_points(int count, std::uint64_t seed) {
    std::vector<std::array<double, 3>> pts;
    std::uint64_t s = seed;
    auto next = [&] {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1.0p-53;
    };
    for (int i = 0; i < count; ++i)
        pts.push_back({2.0 * next(), 2.0 * kPi * (next() - 0.5), 2.0 * kPi * (next() - 0.5)});
    return pts;
}

}  // namespace

TEST_CASE("X1 characteristic is (1, 0, 0)") {
    GridSpec g = box(32);
    PhysicalParams p = lab_params();
    FlowState s = random_state(g, 10, 1.0);
    auto W = characteristics(make_generator(GenId::X1, p), s, tendencies(s, p));
    CHECK(max_abs_diff(W.w1(), ScalarField(g, 1.0)) == 0.0);
    CHECK(W.w2().max_abs() == 0.0);
    CHECK(W.w3().max_abs() == 0.0);
}

TEST_CASE("X4 characteristic is minus the time derivative") {
    GridSpec g = box(32);
    PhysicalParams p = lab_params();
    FlowState s = random_state(g, 20, 1.0);
    Tendencies td = tendencies(s, p);
    auto W = characteristics(make_generator(GenId::X4, p), s, td);
    CHECK(max_abs_diff(W.w1(), -1.0 * td.dv_dt) <= 1e-14);
    CHECK(max_abs_diff(W.w2(), -1.0 * td.drho_dt) <= 1e-14);
    CHECK(max_abs_diff(W.w3(), -1.0 * td.dpsi_dt) <= 1e-14);
}

TEST_CASE("X8 characteristics match the published component formulas") {
    GridSpec g = box(64);
    PhysicalParams p = lab_params();
    FlowState s = random_state(g, 30, 1.0, /*t=*/0.7);
    Tendencies td = tendencies(s, p);
    auto W = characteristics(make_generator(GenId::X8, p), s, td);

    const ScalarField x = coordinate_x(g), z = coordinate_z(g);
    const double t = s.t;
    // W1 = -2 f x - t v_t - 2 x v_x - 2 z v_z
    ScalarField w1 = -2.0 * p.f * x - t * td.dv_dt - 2.0 * pointwise(x, ddx(s.v)) -
                     2.0 * pointwise(z, ddz(s.v));
    // W2 = 2 (N^2/g) z - t rho_t - 2 x rho_x - 2 z rho_z
    ScalarField w2 = 2.0 * p.N2_over_g() * z - t * td.drho_dt - 2.0 * pointwise(x, ddx(s.rho)) -
                     2.0 * pointwise(z, ddz(s.rho));
    // W3 = 3 psi - t psi_t - 2 x psi_x - 2 z psi_z
    ScalarField w3 = 3.0 * s.psi - t * td.dpsi_dt - 2.0 * pointwise(x, ddx(s.psi)) -
                     2.0 * pointwise(z, ddz(s.psi));
    CHECK(max_abs_diff(W.w1(), w1) <= 1e-12);
    CHECK(max_abs_diff(W.w2(), w2) <= 1e-12);
    CHECK(max_abs_diff(W.w3(), w3) <= 1e-12);
}

TEST_CASE("characteristics are linear in the generator") {
    GridSpec g = box(48);
    PhysicalParams p = lab_params();
    FlowState s = random_state(g, 40, 1.0, 0.4);
    Tendencies td = tendencies(s, p);
    Generator a = make_generator(GenId::X5, p, TimeProfile::polynomial({0.3, 1.0, 0.2}));
    Generator b = make_generator(GenId::X7, p);
    Generator combo = linear_combination(2.0, a, -1.5, b);
    auto Wa = characteristics(a, s, td);
    auto Wb = characteristics(b, s, td);
    auto Wc = characteristics(combo, s, td);
    CHECK(max_abs_diff(Wc.w1(), 2.0 * Wa.w1() - 1.5 * Wb.w1()) <= 1e-12);
    CHECK(max_abs_diff(Wc.w2(), 2.0 * Wa.w2() - 1.5 * Wb.w2()) <= 1e-12);
    CHECK(max_abs_diff(Wc.w3(), 2.0 * Wa.w3() - 1.5 * Wb.w3()) <= 1e-12);
}

TEST_CASE("raw density of the zero state vanishes") {
    GridSpec g = box(32);
    PhysicalParams p = lab_params();
    FlowState s = FlowState::zero(g);
    Tendencies td = tendencies(s, p);
    auto W = characteristics(make_generator(GenId::X8, p), s, td);
    CHECK(raw_density(s, W, p).max_abs() == 0.0);
}

TEST_CASE("X8 raw density on constants is 2 f x v0 - 2 g z r0") {
    GridSpec g = box(32);
    PhysicalParams p = lab_params();
    const double v0 = 1.3, r0 = -0.4;
    FlowState s = FlowState::from_psi(0.0, ScalarField(g, v0), ScalarField(g, r0), ScalarField(g));
    Tendencies td = tendencies(s, p);
    auto W = characteristics(make_generator(GenId::X8, p), s, td);
    ScalarField expected =
        2.0 * p.f * v0 * coordinate_x(g) - 2.0 * p.g * r0 * coordinate_z(g);
    CHECK(max_abs_diff(raw_density(s, W, p), expected) <= 1e-12);
}

TEST_CASE("semi-dilation raw density: characteristic formula equals the expanded form") {
    GridSpec g = box(128);
    PhysicalParams p = lab_params();
    for (std::uint64_t seed : {100, 200, 300}) {
        FlowState s = random_state(g, seed, 1.0, /*t=*/0.7);
        Tendencies td = tendencies(s, p);
        auto W = characteristics(make_generator(GenId::X8, p), s, td);
        ScalarField via_formula = raw_density(s, W, p);
        ScalarField via_expansion = semi_dilation_density_expanded(s, td, p);
        CHECK(max_abs_diff(via_formula, via_expansion) <= 1e-9);
    }
}

TEST_CASE("displacement identities hold on random band-limited fields") {
    GridSpec g = box(128);
    PhysicalParams p = lab_params();
    for (std::uint64_t seed : {11, 22, 33}) {
        FlowState s = random_state(g, seed, 1.0);
        CHECK(displacement_identity_residual_quadratic(s, p) <= 1e-9);
        CHECK(displacement_identity_residual_gradsq(s) <= 1e-9);
    }
}

TEST_CASE("every finite transform is the identity at eps = 0") {
    PhysicalParams p = lab_params();
    auto base = std::make_shared<InvariantSolution>(wave_spec(p), p);
    auto pts = sample_points(50, 999);
    for (int i = 0; i < 9; ++i) {
        const GenId id = static_cast<GenId>(i);
        Generator gen = make_generator(id, p, TimeProfile::polynomial({0.1, 0.4, 0.05}));
        SamplerPtr mapped = finite_transform(gen, 0.0, base);
        double worst = 0.0;
        for (const auto& q : pts) {
            const FlowJet a = mapped->at(q[0], q[1], q[2]);
            const FlowJet b = base->at(q[0], q[1], q[2]);
            worst = std::max({worst, std::abs(a.v - b.v), std::abs(a.rho - b.rho),
                              std::abs(a.psi - b.psi), std::abs(a.psi_xxt - b.psi_xxt)});
        }
        CAPTURE(to_string(id));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("X8 point map matches the published exponents") {
    // (t, x, z, psi) = (1, 1, 1, 1), eps = 0.1 maps to
    // (e^{0.1}, e^{0.2}, e^{0.2}, e^{0.3}).
    // Pulled back: evaluating the image at (e^{0.1}, e^{0.2}, e^{0.2})
    // must hit the original point and scale psi by e^{0.3}.
    PhysicalParams p = lab_params();
    const double eps = 0.1;

    struct Probe final : SolutionSampler {
        FlowJet at(double t, double x, double z) const override {
            FlowJet j;
            // linear ramp marking the evaluation point; psi = 1 at probe point
            j.psi = 1.0 + (t - 1.0) + 2.0 * (x - 1.0) + 3.0 * (z - 1.0);
            return j;
        }
    };
    auto base = std::make_shared<Probe>();
    Generator gen = make_generator(GenId::X8, p);
    SamplerPtr mapped = finite_transform(gen, eps, base);
    const FlowJet out = mapped->at(std::exp(0.1), std::exp(0.2), std::exp(0.2));
    // preimage must be exactly (1,1,1), so the ramp contributes nothing
    CHECK(out.psi == doctest::Approx(std::exp(0.3)).epsilon(1e-12));
}

TEST_CASE("one-parameter group law holds for every generator") {
    PhysicalParams p = lab_params();
    auto base = std::make_shared<InvariantSolution>(wave_spec(p), p);
    auto pts = sample_points(40, 4242);
    for (int i = 0; i < 9; ++i) {
        const GenId id = static_cast<GenId>(i);
        Generator gen = make_generator(id, p, TimeProfile::harmonic(0.3, 0.1, 0.9));
        CAPTURE(to_string(id));
        CHECK(group_law_residual(gen, 0.13, 0.21, base, pts) <= 1e-10);
    }
}

TEST_CASE("X9 transform round-trips to 1e-10") {
    PhysicalParams p = lab_params();
    auto base = std::make_shared<InvariantSolution>(wave_spec(p), p);
    auto pts = sample_points(60, 7);
    Generator gen = make_generator(GenId::X9, p);
    CHECK(round_trip_residual(gen, 0.37, base, pts) <= 1e-10);
}

TEST_CASE("X9 requires a nonzero Coriolis parameter") {
    PhysicalParams no_rotation(0.0, 2.0, 9.8);
    CHECK_THROWS_WITH_AS(make_generator(GenId::X9, no_rotation), doctest::Contains("f != 0"),
                         std::invalid_argument);
}

TEST_CASE("solution map: shifts and gauge transforms preserve the residual") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(32);  // pointwise evaluation grid
    const std::vector<double> times{0.0, 0.4};

    CHECK(solution_map_check(make_generator(GenId::X1, p), 0.5, spec, p, g, times).max_residual <=
          1e-8);
    CHECK(solution_map_check(make_generator(GenId::X2, p), 0.5, spec, p, g, times).max_residual <=
          1e-8);
    Generator x3 = make_generator(GenId::X3, p, TimeProfile::harmonic(1.0, 0.5, 1.3));
    CHECK(solution_map_check(x3, 0.8, spec, p, g, times).max_residual <= 1e-8);
    CHECK(solution_map_check(make_generator(GenId::X4, p), 0.3, spec, p, g, times).max_residual <=
          1e-8);
}

TEST_CASE("solution map: time-dependent translations X5 and X6 map solutions to solutions") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(32);
    const std::vector<double> times{0.1, 0.6};
    Generator x5 = make_generator(GenId::X5, p, TimeProfile::polynomial({0.2, 0.7, 0.3, 0.05}));
    CHECK(solution_map_check(x5, 0.4, spec, p, g, times).max_residual <= 1e-8);
    Generator x6 = make_generator(GenId::X6, p, TimeProfile::harmonic(0.6, 0.2, 0.8));
    CHECK(solution_map_check(x6, 0.4, spec, p, g, times).max_residual <= 1e-8);
}

TEST_CASE("solution map: dilation X7 maps solutions to solutions") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(32);
    CHECK(solution_map_check(make_generator(GenId::X7, p), 0.25, spec, p, g, {0.0, 0.5}).max_residual <=
          1e-8);
}

TEST_CASE("solution map: X8 semi-dilation with the z-weighted density shift") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(128);
    auto rep = solution_map_check(make_generator(GenId::X8, p), 0.2, spec, p, g, {0.0, 0.3, 0.9});
    CHECK(rep.max_residual <= 1e-7);
}

TEST_CASE("X8 with the misprinted rho shift (no z factor) fails the solution map") {
    // Direct check that the corrected exponentiation is the right call:
    // replace rho_bar = rho + (N^2/g) z (e^{2eps}-1) by the printed
    // rho_bar = rho + (N^2/g)(e^{2eps}-1) and the residual jumps to O(1).
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    auto base = std::make_shared<InvariantSolution>(spec, p);
    const double eps = 0.2;
    const double e2 = std::exp(2.0 * eps);

    Generator gen = make_generator(GenId::X8, p);
    SamplerPtr good = finite_transform(gen, eps, base);

    struct Broken final : SolutionSampler {
        SamplerPtr good;
        double n2g, e2, eps;
        FlowJet at(double T, double X, double Z) const override {
            FlowJet j = good->at(T, X, Z);
            const double z_pre = Z * std::exp(-2.0 * eps);
            j.rho += n2g * (e2 - 1.0) * (1.0 - z_pre);  // z-weighted -> constant shift
            j.rho_z -= std::exp(-2.0 * eps) * n2g * (e2 - 1.0);
            return j;
        }
    };
    auto broken = std::make_shared<Broken>();
    broken->good = good;
    broken->n2g = p.N2_over_g();
    broken->e2 = e2;
    broken->eps = eps;

    GridSpec g = box(32);
    const double good_res = max_residual_on_grid(*good, g, 0.3, p);
    const double broken_res = max_residual_on_grid(*broken, g, 0.3, p);
    CHECK(good_res <= 1e-7);
    CHECK(broken_res > 1e-2);
}

TEST_CASE("X9 linearized perturbation residual scales as O(eps^2)") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(64);
    Generator gen = make_generator(GenId::X9, p);
    const double r1 = linearized_map_residual(gen, spec, p, g, 0.3, 1e-2);
    const double r2 = linearized_map_residual(gen, spec, p, g, 0.3, 5e-3);
    const double r3 = linearized_map_residual(gen, spec, p, g, 0.3, 2.5e-3);
    const double order12 = std::log2(r1 / r2);
    const double order23 = std::log2(r2 / r3);
    CHECK(order12 >= 1.9);
    CHECK(order23 >= 1.9);
    CHECK(order12 <= 2.1);
}

TEST_CASE("trajectory sampler reproduces the exact solution between snapshots") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(48);
    InvariantSolution exact(spec, p);

    std::vector<FlowState> states;
    std::vector<Tendencies> tds;
    for (int i = 0; i <= 8; ++i) {
        const double t = 0.05 * i;
        states.push_back(invariant_solution(spec, p, g, t));
        tds.push_back(invariant_solution_tendencies(spec, p, g, t));
    }
    TrajectorySampler traj(states, tds);

    double worst = 0.0;
    for (const auto& q : sample_points(25, 3101)) {
        const double t = 0.4 * std::abs(std::sin(q[0]));  // inside [0, 0.4]
        const FlowJet a = traj.at(t, q[1], q[2]);
        const FlowJet b = exact.at(t, q[1], q[2]);
        worst = std::max({worst, std::abs(a.v - b.v), std::abs(a.rho - b.rho),
                          std::abs(a.psi - b.psi), std::abs(a.psi_t - b.psi_t)});
    }
    CHECK(worst <= 1e-5);
    CHECK_THROWS_AS(traj.at(5.0, 0.0, 0.0), std::out_of_range);
}

TEST_CASE("X4 time shift on a trajectory sampler round-trips") {
    PhysicalParams p = lab_params();
    InvariantSolutionSpec spec = wave_spec(p);
    GridSpec g = box(32);
    std::vector<FlowState> states;
    std::vector<Tendencies> tds;
    for (int i = 0; i <= 6; ++i) {
        states.push_back(invariant_solution(spec, p, g, 0.1 * i));
        tds.push_back(invariant_solution_tendencies(spec, p, g, 0.1 * i));
    }
    auto traj = std::make_shared<TrajectorySampler>(states, tds);
    Generator x4 = make_generator(GenId::X4, p);
    SamplerPtr shifted = finite_transform(x4, 0.25, traj);
    // t = 0.3 pulls back to 0.05, inside the stored range
    const FlowJet a = shifted->at(0.3, 1.0, -1.0);
    const FlowJet b = traj->at(0.05, 1.0, -1.0);
    CHECK(a.v == b.v);
    CHECK(a.psi == b.psi);
    // out-of-domain pullback must surface the trajectory's domain error
    CHECK_THROWS_AS(shifted->at(0.9, 0.0, 0.0), std::out_of_range);
}
