#pragma once

#include "igw/field.hpp"
#include "igw/spectral.hpp"

namespace igw {

/// A field of the form  sum_{p+q<=2} x^p z^q F_pq(x,z)  with periodic
/// component fields F_pq and exact coordinate weights.
///
/// The coordinate weights x, z are never differentiated spectrally:
/// derivatives expand by the product rule onto the periodic components,
/// which keeps every weighted expression free of the boundary sawtooth.
/// Degree two is enough for all quadratic expressions built from
/// once-weighted factors (characteristics, weighted densities, fluxes).
class CoordPolyField {
  public:
    static constexpr int kSlots = 6;  // (p,q): 1, x, z, x^2, xz, z^2

    CoordPolyField() = default;
    explicit CoordPolyField(const GridSpec& grid) : grid_(grid) {}

    static CoordPolyField plain(ScalarField f) {
        CoordPolyField out(f.grid());
        out.comp_[slot(0, 0)] = std::move(f);
        return out;
    }
    /// x^p z^q * coeff
    static CoordPolyField monomial(int p, int q, ScalarField coeff) {
        CoordPolyField out(coeff.grid());
        out.comp_[slot(p, q)] = std::move(coeff);
        return out;
    }

    const GridSpec& grid() const { return grid_; }

    bool has(int p, int q) const { return !comp_[slot(p, q)].empty(); }
    const ScalarField& comp(int p, int q) const { return comp_[slot(p, q)]; }

    /// Adds into slot (p,q).
    void add(int p, int q, const ScalarField& f);

    CoordPolyField& operator+=(const CoordPolyField& o);
    CoordPolyField& operator-=(const CoordPolyField& o);
    CoordPolyField& operator*=(double s);
    friend CoordPolyField operator+(CoordPolyField a, const CoordPolyField& b) { return a += b; }
    friend CoordPolyField operator-(CoordPolyField a, const CoordPolyField& b) { return a -= b; }
    friend CoordPolyField operator*(CoordPolyField a, double s) { return a *= s; }
    friend CoordPolyField operator*(double s, CoordPolyField a) { return a *= s; }

    /// Per-component dealiased product with a plain periodic field.
    CoordPolyField scaled_by(const ScalarField& f) const;

    /// Total derivatives, coordinate weights expanded by the product rule.
    CoordPolyField ddx() const;
    CoordPolyField ddz() const;
    CoordPolyField laplacian() const { return ddx().ddx() + ddz().ddz(); }

    /// Pointwise evaluation: sum of x^p z^q * F_pq with exact coordinates.
    ScalarField collapse() const;

    int degree() const;

    static int slot(int p, int q);

  private:
    GridSpec grid_;
    std::array<ScalarField, kSlots> comp_;
};

/// Dealiased product; throws if the combined coordinate degree exceeds 2.
CoordPolyField multiply(const CoordPolyField& a, const CoordPolyField& b);

/// J(a,b) = a_x b_z - a_z b_x on weighted fields.
CoordPolyField cp_jacobian(const CoordPolyField& a, const CoordPolyField& b);

}  // namespace igw
