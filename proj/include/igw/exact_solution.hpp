#pragma once

#include <vector>

#include "igw/jet.hpp"

namespace igw {

/// Finite trigonometric polynomial sum_j a_j sin(j u) + sum_j b_j cos(j u),
/// closed under differentiation (profiles A, B of the travelling phase).
class TrigPoly {
  public:
    TrigPoly() = default;
    /// a[j-1] multiplies sin(j u), b[j] multiplies cos(j u) (b[0] constant).
    TrigPoly(std::vector<double> sin_coeffs, std::vector<double> cos_coeffs)
        : a_(std::move(sin_coeffs)), b_(std::move(cos_coeffs)) {}

    static TrigPoly sin_wave(double amp = 1.0, int harmonic = 1) {
        std::vector<double> a(harmonic, 0.0);
        a[harmonic - 1] = amp;
        return TrigPoly(std::move(a), {});
    }
    static TrigPoly cos_wave(double amp = 1.0, int harmonic = 1) {
        std::vector<double> b(harmonic + 1, 0.0);
        b[harmonic] = amp;
        return TrigPoly({}, std::move(b));
    }

    double value(double u) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < a_.size(); ++j) acc += a_[j] * std::sin((j + 1) * u);
        for (std::size_t j = 0; j < b_.size(); ++j) acc += b_[j] * std::cos(double(j) * u);
        return acc;
    }

    TrigPoly derivative() const {
        // d/du sin(ju) = j cos(ju); d/du cos(ju) = -j sin(ju)
        std::vector<double> a(b_.size() > 1 ? b_.size() - 1 : 0, 0.0);
        std::vector<double> b(a_.size() + 1, 0.0);
        for (std::size_t j = 0; j < a_.size(); ++j) b[j + 1] = a_[j] * double(j + 1);
        for (std::size_t j = 1; j < b_.size(); ++j) a[j - 1] = -b_[j] * double(j);
        return TrigPoly(std::move(a), std::move(b));
    }

    int max_harmonic() const {
        int m = a_.empty() ? 0 : static_cast<int>(a_.size());
        if (b_.size() > 1) m = std::max<int>(m, static_cast<int>(b_.size()) - 1);
        return m;
    }

    const std::vector<double>& sin_coeffs() const { return a_; }
    const std::vector<double>& cos_coeffs() const { return b_; }

  private:
    std::vector<double> a_;  // sin(j u), j = 1..
    std::vector<double> b_;  // cos(j u), j = 0..
};

/// The travelling-phase wave family: with lambda = k x + m z,
///   psi = A(lambda) cos(w t) + B(lambda) sin(w t)
///   v   = (f m / w) [B' cos(w t) - A' sin(w t)]
///   rho = (k N^2 / (g w)) [B' cos(w t) - A' sin(w t)].
/// It satisfies the governing system exactly when
/// w^2 = (N^2 k^2 + f^2 m^2) / (k^2 + m^2); that relation is confirmed by
/// the substitution tests rather than assumed.
struct InvariantSolutionSpec {
    double k = 0.0;
    double m = 0.0;
    double omega = 0.0;
    TrigPoly A;
    TrigPoly B;

    void validate() const {
        if (k == 0.0 && m == 0.0)
            throw std::invalid_argument("InvariantSolutionSpec: (k, m) must not both vanish");
        if (omega == 0.0) throw std::invalid_argument("InvariantSolutionSpec: omega must be nonzero");
    }
};

/// The frequency making the wave family an exact solution (positive branch).
double dispersion_omega(double k, double m, const PhysicalParams& params);

class InvariantSolution final : public SolutionSampler {
  public:
    InvariantSolution(const InvariantSolutionSpec& spec, const PhysicalParams& params);
    FlowJet at(double t, double x, double z) const override;

    const InvariantSolutionSpec& spec() const { return spec_; }
    const PhysicalParams& params() const { return params_; }

  private:
    InvariantSolutionSpec spec_;
    PhysicalParams params_;
    TrigPoly dA_[4];  // A and derivatives to order 3
    TrigPoly dB_[4];
};

/// Checks that (k Lx / 2 pi, m Lz / 2 pi) are integers, so the wave is
/// periodic on the box; throws otherwise.
void require_periodic_wavenumbers(const InvariantSolutionSpec& spec, const GridSpec& grid);

/// Grid snapshot of the wave family at time t (zeta spectral, psi re-gauged).
FlowState invariant_solution(const InvariantSolutionSpec& spec, const PhysicalParams& params,
                             const GridSpec& grid, double t);

/// Analytic time derivatives of the wave family on the grid.
Tendencies invariant_solution_tendencies(const InvariantSolutionSpec& spec,
                                         const PhysicalParams& params, const GridSpec& grid, double t);

/// Closed-form conserved density of the semi-dilation law on the wave
/// family:
///   P = (1/w)(f^2 m x - N^2 k z)[B' cos wt - A' sin wt]
///       - ((k^2+m^2)/2)[A' cos wt + B' sin wt]^2.
ScalarField closed_form_semi_dilation_density(const InvariantSolutionSpec& spec,
                                              const PhysicalParams& params, const GridSpec& grid,
                                              double t);

}  // namespace igw
