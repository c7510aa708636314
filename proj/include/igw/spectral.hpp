#pragma once

#include <cstdint>

#include "igw/field.hpp"

namespace igw {

/// Raised by invert_laplacian when the source has a non-negligible mean
/// (the periodic Poisson problem is only solvable for zero-mean data).
class SolvabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Spectral x-derivative. Exact for band-limited input below Nyquist;
/// the Nyquist mode is zeroed (odd derivative has no consistent sign there).
ScalarField ddx(const ScalarField& field);

/// Spectral z-derivative, same contract as ddx.
ScalarField ddz(const ScalarField& field);

/// Spectral Laplacian, d2/dx2 + d2/dz2.
ScalarField laplacian(const ScalarField& field);

/// Solves laplacian(psi) = zeta on the periodic box, returning the
/// zero-mean psi. Throws SolvabilityError when |mean(zeta)| exceeds
/// 1e-8 * max|zeta| (any smaller mean is treated as round-off and dropped).
ScalarField invert_laplacian(const ScalarField& zeta);

/// 2/3-rule low-pass: zeroes every mode with |kx| > nx/3 or |kz| > nz/3.
ScalarField dealias(const ScalarField& field);

/// Pointwise product followed by the 2/3-rule filter. This is the product
/// used inside every quadratic term of the model (Jacobians, |grad psi|^2,
/// density and flux assembly).
ScalarField multiply_dealiased(const ScalarField& a, const ScalarField& b);

/// Advective bracket J(a,b) = a_x b_z - a_z b_x, products dealiased.
ScalarField jacobian(const ScalarField& a, const ScalarField& b);

/// psi_x^2 + psi_z^2, products dealiased.
ScalarField grad_norm_sq(const ScalarField& psi);

/// Uniform-weight quadrature sum(values) * dx * dz; spectrally accurate
/// for periodic integrands.
double integrate(const ScalarField& field);

/// Mean over the box, integrate(field) / (Lx*Lz).
double mean(const ScalarField& field);

/// Subtracts the mean (the zero-mean gauge used for streamfunctions).
ScalarField remove_mean(const ScalarField& field);

/// Resamples a periodic field onto a finer/coarser grid over the same box
/// by zero-padding / truncating its spectrum (Fourier-exact for resolved
/// content). Used by sampler interpolation and refinement oracles.
ScalarField spectral_resample(const ScalarField& field, const GridSpec& target);

/// Fourier-exact evaluation of a periodic field at an arbitrary point,
/// sum over modes of fhat(k) * exp(i k.(x,z)). O(nx*nz) per call.
double spectral_eval(const ScalarField& field, double x, double z);

/// Seeded random field with spectral content confined to |kx|,|kz| <= kmax
/// (mode index bound), zero mean, scaled so max|field| = amplitude.
/// Deterministic across platforms for a given seed.
ScalarField random_band_limited(const GridSpec& grid, int kmax, double amplitude, std::uint64_t seed);

namespace detail {
/// Rejects non-finite samples; every spectral operation calls this.
void require_finite(const ScalarField& f, const char* op);
}  // namespace detail

}  // namespace igw
