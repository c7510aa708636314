#pragma once

#include <array>
#include <string>

#include "igw/coordpoly.hpp"
#include "igw/params.hpp"

namespace igw {

/// Scalar function of t from a basis closed under differentiation:
/// polynomials up to degree 4 plus amp_sin sin(sigma t) + amp_cos cos(sigma t).
class TimeProfile {
  public:
    TimeProfile() = default;

    static TimeProfile constant(double c) {
        TimeProfile p;
        p.poly_[0] = c;
        return p;
    }
    static TimeProfile polynomial(const std::vector<double>& coeffs) {
        if (coeffs.size() > 5)
            throw std::invalid_argument("TimeProfile: polynomial degree above 4");
        TimeProfile p;
        for (std::size_t i = 0; i < coeffs.size(); ++i) p.poly_[i] = coeffs[i];
        return p;
    }
    static TimeProfile harmonic(double amp_sin, double amp_cos, double sigma) {
        TimeProfile p;
        p.sin_ = amp_sin;
        p.cos_ = amp_cos;
        p.sigma_ = sigma;
        return p;
    }

    double value(double t) const {
        double acc = 0.0, tp = 1.0;
        for (double c : poly_) {
            acc += c * tp;
            tp *= t;
        }
        if (sin_ != 0.0 || cos_ != 0.0) acc += sin_ * std::sin(sigma_ * t) + cos_ * std::cos(sigma_ * t);
        return acc;
    }

    /// Exact derivative, same basis.
    TimeProfile derivative() const {
        TimeProfile d;
        for (int i = 1; i < 5; ++i) d.poly_[i - 1] = poly_[i] * i;
        d.sin_ = -cos_ * sigma_;
        d.cos_ = sin_ * sigma_;
        d.sigma_ = sigma_;
        return d;
    }

    TimeProfile scaled(double s) const {
        TimeProfile p = *this;
        for (double& c : p.poly_) c *= s;
        p.sin_ *= s;
        p.cos_ *= s;
        return p;
    }

    /// Componentwise sum; throws if both carry harmonics at different sigma.
    static TimeProfile sum(const TimeProfile& a, const TimeProfile& b) {
        TimeProfile out = a;
        for (int i = 0; i < 5; ++i) out.poly_[i] += b.poly_[i];
        const bool a_h = a.sin_ != 0.0 || a.cos_ != 0.0;
        const bool b_h = b.sin_ != 0.0 || b.cos_ != 0.0;
        if (a_h && b_h && a.sigma_ != b.sigma_)
            throw std::invalid_argument("TimeProfile: cannot add harmonics at different frequencies");
        out.sin_ += b.sin_;
        out.cos_ += b.cos_;
        if (!a_h) out.sigma_ = b.sigma_;
        return out;
    }

    bool is_zero() const {
        for (double c : poly_)
            if (c != 0.0) return false;
        return sin_ == 0.0 && cos_ == 0.0;
    }

  private:
    std::array<double, 5> poly_{};
    double sin_ = 0.0, cos_ = 0.0, sigma_ = 0.0;
};

enum class GenId { X1, X2, X3, X4, X5, X6, X7, X8, X9 };

const char* to_string(GenId id);
GenId gen_id_from_string(const std::string& name);

/// Coefficient function c1(t) + cx(t) x + cz(t) z of one generator entry.
struct SpaceCoeff {
    TimeProfile c1, cx, cz;
    bool is_zero() const { return c1.is_zero() && cx.is_zero() && cz.is_zero(); }
};

/// Constant coefficients multiplying the dependent variables in an eta.
struct FieldLinear {
    double v = 0.0, rho = 0.0, psi = 0.0;
};

/// One infinitesimal generator: base components xi (on t, x, z) and fibre
/// components eta (split into an explicit space-time part and a part linear
/// in the fields).
struct Generator {
    GenId id = GenId::X1;
    PhysicalParams params;
    TimeProfile xi_t;
    SpaceCoeff xi_x, xi_z;
    SpaceCoeff eta_v, eta_rho, eta_psi;
    FieldLinear lin_v, lin_rho, lin_psi;
    TimeProfile profile;  // the arbitrary a(t)/b(t)/c(t) of X3/X5/X6
};

/// Builds one of the nine generators. The profile is required for X3, X5,
/// X6 (defaults to t |-> t) and ignored elsewhere. X9 requires f != 0.
Generator make_generator(GenId id, const PhysicalParams& params,
                         const TimeProfile& profile = TimeProfile::polynomial({0.0, 1.0}));

/// Linear combination a*ga + b*gb of two generators built for the same
/// parameters (the characteristics are linear in this span).
Generator linear_combination(double a, const Generator& ga, double b, const Generator& gb);

}  // namespace igw
