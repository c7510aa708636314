#pragma once

#include <vector>

#include "igw/characteristics.hpp"
#include "igw/exact_solution.hpp"
#include "igw/generators.hpp"
#include "igw/jet.hpp"

namespace igw {

/// One-parameter finite transform of a solution: returns the sampler of the
/// transformed solution (group element applied to the graph, evaluated by
/// pulling queries back through the base map and pushing the jet forward by
/// the chain rule).
///
/// Closed forms for X1..X8; X9's (v, rho) fibre flow is integrated
/// numerically in the group parameter (it is affine, so one fundamental
/// matrix integration serves every point; tolerance ~1e-12).
SamplerPtr finite_transform(const Generator& gen, double eps, SamplerPtr sol);

/// Max over sample points of |jet(transform(e1, transform(e2, sol))) -
/// jet(transform(e1+e2, sol))| on the primitive values (v, rho, psi) —
/// the one-parameter group law.
double group_law_residual(const Generator& gen, double e1, double e2, SamplerPtr sol,
                          const std::vector<std::array<double, 3>>& points);

/// Max over sample points of the eps -> -eps round trip defect.
double round_trip_residual(const Generator& gen, double eps, SamplerPtr sol,
                           const std::vector<std::array<double, 3>>& points);

struct SolutionMapReport {
    GenId id;
    double eps = 0.0;
    double max_residual = 0.0;  // max PDE residual of the transformed solution
};

/// Transforms the exact wave solution and evaluates the governing-equation
/// residual of the result pointwise on the grid at the given times (all
/// derivatives from the transformed jet, none spectral).
SolutionMapReport solution_map_check(const Generator& gen, double eps,
                                     const InvariantSolutionSpec& spec, const PhysicalParams& params,
                                     const GridSpec& grid, const std::vector<double>& times);

/// Residual of the first-order perturbed solution u + eps*W(u), where W is
/// the generator's characteristic on the exact solution; the x,z-weighted
/// perturbation terms are handled in weighted form so no coordinate is
/// differentiated spectrally. For an exact symmetry this scales as O(eps^2).
/// Requires a generator with no time component (xi_t = 0) and
/// time-independent coefficients (X7, X9).
double linearized_map_residual(const Generator& gen, const InvariantSolutionSpec& spec,
                               const PhysicalParams& params, const GridSpec& grid, double t,
                               double eps);

/// Solution representation backed by stored snapshots: Fourier-exact in
/// space (periodic), cubic Hermite in time, with the snapshot tendencies
/// supplying the Hermite slopes. Time derivatives in the jet are the exact
/// derivatives of the interpolant. Queries outside the stored time range
/// throw std::out_of_range.
class TrajectorySampler final : public SolutionSampler {
  public:
    TrajectorySampler(std::vector<FlowState> states, std::vector<Tendencies> tendencies);
    ~TrajectorySampler() override;
    FlowJet at(double t, double x, double z) const override;

    double t_min() const { return times_.front(); }
    double t_max() const { return times_.back(); }

  private:
    struct Node;
    std::vector<double> times_;
    std::vector<Node> nodes_;
};

}  // namespace igw
