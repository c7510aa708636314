#pragma once

#include <stdexcept>
#include <string>

namespace igw {

/// Uniform doubly periodic grid on [-Lx/2, Lx/2) x [-Lz/2, Lz/2).
///
/// Samples sit at cell centers, x_i = -Lx/2 + (i + 1/2) dx, so the
/// coordinate arrays are exactly antisymmetric: x_i = -x_{nx-1-i}.
/// Coordinate-weighted quadratures (the x- and z-weighted invariants)
/// rely on that pairing to vanish identically on symmetric integrands.
struct GridSpec {
    int nx = 0;
    int nz = 0;
    double Lx = 0.0;
    double Lz = 0.0;

    GridSpec() = default;
    GridSpec(int nx_, int nz_, double Lx_, double Lz_) : nx(nx_), nz(nz_), Lx(Lx_), Lz(Lz_) {
        validate();
    }

    void validate() const {
        if (nx < 8 || nx % 2 != 0)
            throw std::invalid_argument("GridSpec: nx must be even and >= 8, got " + std::to_string(nx));
        if (nz < 8 || nz % 2 != 0)
            throw std::invalid_argument("GridSpec: nz must be even and >= 8, got " + std::to_string(nz));
        if (!(Lx > 0.0))
            throw std::invalid_argument("GridSpec: Lx must be > 0");
        if (!(Lz > 0.0))
            throw std::invalid_argument("GridSpec: Lz must be > 0");
    }

    double dx() const { return Lx / nx; }
    double dz() const { return Lz / nz; }

    /// x coordinate of sample column i; x_i = -x_{nx-1-i} exactly.
    double x(int i) const { return (2 * i - nx + 1) * (Lx / (2 * nx)); }
    /// z coordinate of sample row j; z_j = -z_{nz-1-j} exactly.
    double z(int j) const { return (2 * j - nz + 1) * (Lz / (2 * nz)); }

    /// Coordinates of the first sample.
    double x0() const { return x(0); }
    double z0() const { return z(0); }

    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(nz); }

    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.nx == b.nx && a.nz == b.nz && a.Lx == b.Lx && a.Lz == b.Lz;
    }
    friend bool operator!=(const GridSpec& a, const GridSpec& b) { return !(a == b); }
};

}  // namespace igw
