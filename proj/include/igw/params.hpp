#pragma once

#include <cmath>
#include <stdexcept>

namespace igw {

/// Constant environment parameters: Coriolis parameter f, buoyancy
/// frequency N, gravitational acceleration g.
struct PhysicalParams {
    double f = 0.0;
    double N = 1.0;
    double g = 9.8;

    PhysicalParams() = default;
    PhysicalParams(double f_, double N_, double g_) : f(f_), N(N_), g(g_) { validate(); }

    void validate() const {
        if (!std::isfinite(f)) throw std::invalid_argument("PhysicalParams: f must be finite");
        if (!(N > 0.0) || !std::isfinite(N)) throw std::invalid_argument("PhysicalParams: N must be > 0");
        if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("PhysicalParams: g must be > 0");
    }

    double N2_over_g() const { return N * N / g; }
    double g2_over_N2() const { return g * g / (N * N); }
};

}  // namespace igw
