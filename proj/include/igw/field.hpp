#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "igw/grid.hpp"

namespace igw {

/// One real-valued 2-D field sampled on a GridSpec, row-major over (x, z):
/// entry (ix, iz) lives at index ix*nz + iz.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& grid, double fill = 0.0)
        : grid_(grid), values_(grid.size(), fill) {}

    const GridSpec& grid() const { return grid_; }

    double& operator()(int ix, int iz) { return values_[static_cast<std::size_t>(ix) * grid_.nz + iz]; }
    double operator()(int ix, int iz) const { return values_[static_cast<std::size_t>(ix) * grid_.nz + iz]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    bool all_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    ScalarField& operator+=(const ScalarField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        check_same_grid(o);
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    ScalarField& operator*=(double s) {
        for (double& v : values_) v *= s;
        return *this;
    }

    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(ScalarField a, double s) { return a *= s; }
    friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

    void check_same_grid(const ScalarField& o) const {
        if (grid_ != o.grid_) throw std::invalid_argument("ScalarField: grid mismatch");
    }

  private:
    GridSpec grid_;
    std::vector<double> values_;
};

/// y += a*x
inline void axpy(double a, const ScalarField& x, ScalarField& y) {
    y.check_same_grid(x);
    auto xv = x.values();
    auto yv = y.values();
    for (std::size_t i = 0; i < yv.size(); ++i) yv[i] += a * xv[i];
}

/// Plain pointwise product (no dealiasing; see spectral.hpp for the dealiased one).
inline ScalarField pointwise(const ScalarField& a, const ScalarField& b) {
    a.check_same_grid(b);
    ScalarField out(a.grid());
    auto av = a.values(), bv = b.values();
    auto ov = out.values();
    for (std::size_t i = 0; i < ov.size(); ++i) ov[i] = av[i] * bv[i];
    return out;
}

inline ScalarField sample(const GridSpec& grid, const std::function<double(double, double)>& f) {
    ScalarField out(grid);
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.nz; ++j) out(i, j) = f(grid.x(i), grid.z(j));
    return out;
}

/// Coordinate fields used as integrand weights. They are exact sample
/// values, never to be differentiated spectrally.
inline ScalarField coordinate_x(const GridSpec& grid) {
    return sample(grid, [](double x, double) { return x; });
}
inline ScalarField coordinate_z(const GridSpec& grid) {
    return sample(grid, [](double, double z) { return z; });
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    a.check_same_grid(b);
    double m = 0.0;
    auto av = a.values(), bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
    return m;
}

}  // namespace igw
