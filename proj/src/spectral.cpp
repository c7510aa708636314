#include "igw/spectral.hpp"

#include <fftw3.h>

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace igw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Per-grid FFTW plans and buffers. Instances live in a thread_local cache,
/// so concurrent callers never share mutable transform state.
class Workspace {
  public:
    explicit Workspace(const GridSpec& grid)
        : nx_(grid.nx), nz_(grid.nz), Lx_(grid.Lx), Lz_(grid.Lz), nzh_(grid.nz / 2 + 1) {
        real_ = fftw_alloc_real(static_cast<std::size_t>(nx_) * nz_);
        spec_ = fftw_alloc_complex(static_cast<std::size_t>(nx_) * nzh_);
        // Plan creation is not thread-safe in FFTW; execution is.
        std::lock_guard<std::mutex> lock(plan_mutex());
        // FFTW_ESTIMATE keeps planning deterministic run to run.
        fwd_ = fftw_plan_dft_r2c_2d(nx_, nz_, real_, spec_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_2d(nx_, nz_, spec_, real_, FFTW_ESTIMATE);
    }

    ~Workspace() {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(real_);
        fftw_free(spec_);
    }

    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    void load(const ScalarField& f) {
        auto v = f.values();
        std::copy(v.begin(), v.end(), real_);
        fftw_execute(fwd_);
    }

    ScalarField unload(const GridSpec& grid) {
        fftw_execute(bwd_);
        ScalarField out(grid);
        auto v = out.values();
        const double norm = 1.0 / (static_cast<double>(nx_) * nz_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = real_[i] * norm;
        return out;
    }

    std::complex<double>* spec() { return reinterpret_cast<std::complex<double>*>(spec_); }

    double kx(int i) const {
        const int m = (i <= nx_ / 2) ? i : i - nx_;
        return kTwoPi * m / Lx_;
    }
    double kz(int j) const { return kTwoPi * j / Lz_; }

    int nx() const { return nx_; }
    int nz() const { return nz_; }
    int nzh() const { return nzh_; }

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * nzh_ + j; }

    static std::mutex& plan_mutex() {
        static std::mutex m;
        return m;
    }

  private:
    int nx_, nz_;
    double Lx_, Lz_;
    int nzh_;
    double* real_ = nullptr;
    fftw_complex* spec_ = nullptr;
    fftw_plan fwd_{}, bwd_{};
};

Workspace& workspace_for(const GridSpec& grid) {
    using Key = std::tuple<int, int, double, double>;
    thread_local std::map<Key, std::unique_ptr<Workspace>> cache;
    Key key{grid.nx, grid.nz, grid.Lx, grid.Lz};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Workspace>(grid)).first;
    return *it->second;
}

enum class Deriv { Dx, Dz, Lap, InvLap, Dealias };

ScalarField apply_multiplier(const ScalarField& field, Deriv which) {
    const GridSpec& g = field.grid();
    Workspace& ws = workspace_for(g);
    ws.load(field);
    auto* s = ws.spec();
    const int nx = ws.nx(), nzh = ws.nzh();
    const int cx = nx / 3, cz = ws.nz() / 3;
    for (int i = 0; i < nx; ++i) {
        const double kx = ws.kx(i);
        const bool x_nyquist = (i == nx / 2);
        const int mx = (i <= nx / 2) ? i : nx - i;
        for (int j = 0; j < nzh; ++j) {
            const double kz = ws.kz(j);
            auto& c = s[ws.idx(i, j)];
            switch (which) {
                case Deriv::Dx:
                    c = x_nyquist ? 0.0 : c * std::complex<double>(0.0, kx);
                    break;
                case Deriv::Dz:
                    c = (j == ws.nz() / 2) ? 0.0 : c * std::complex<double>(0.0, kz);
                    break;
                case Deriv::Lap:
                    c *= -(kx * kx + kz * kz);
                    break;
                case Deriv::InvLap: {
                    const double k2 = kx * kx + kz * kz;
                    c = (k2 == 0.0) ? 0.0 : c / (-k2);
                    break;
                }
                case Deriv::Dealias:
                    if (mx > cx || j > cz) c = 0.0;
                    break;
            }
        }
    }
    return ws.unload(g);
}

}  // namespace

namespace detail {
void require_finite(const ScalarField& f, const char* op) {
    if (f.empty()) throw std::invalid_argument(std::string(op) + ": empty field");
    if (!f.all_finite()) throw std::invalid_argument(std::string(op) + ": non-finite input values");
}
}  // namespace detail

ScalarField ddx(const ScalarField& field) {
    detail::require_finite(field, "ddx");
    return apply_multiplier(field, Deriv::Dx);
}

ScalarField ddz(const ScalarField& field) {
    detail::require_finite(field, "ddz");
    return apply_multiplier(field, Deriv::Dz);
}

ScalarField laplacian(const ScalarField& field) {
    detail::require_finite(field, "laplacian");
    return apply_multiplier(field, Deriv::Lap);
}

ScalarField invert_laplacian(const ScalarField& zeta) {
    detail::require_finite(zeta, "invert_laplacian");
    const double m = mean(zeta);
    const double scale = zeta.max_abs();
    if (std::abs(m) > 1e-8 * std::max(scale, 1e-300))
        throw SolvabilityError("invert_laplacian: source mean " + std::to_string(m) +
                               " violates periodic solvability");
    return apply_multiplier(zeta, Deriv::InvLap);
}

ScalarField dealias(const ScalarField& field) {
    detail::require_finite(field, "dealias");
    return apply_multiplier(field, Deriv::Dealias);
}

ScalarField multiply_dealiased(const ScalarField& a, const ScalarField& b) {
    return dealias(pointwise(a, b));
}

ScalarField jacobian(const ScalarField& a, const ScalarField& b) {
    a.check_same_grid(b);
    ScalarField ax = ddx(a), az = ddz(a);
    ScalarField bx = ddx(b), bz = ddz(b);
    return multiply_dealiased(ax, bz) - multiply_dealiased(az, bx);
}

ScalarField grad_norm_sq(const ScalarField& psi) {
    ScalarField px = ddx(psi), pz = ddz(psi);
    return multiply_dealiased(px, px) + multiply_dealiased(pz, pz);
}

double integrate(const ScalarField& field) {
    detail::require_finite(field, "integrate");
    double sum = 0.0;
    for (double v : field.values()) sum += v;
    return sum * field.grid().dx() * field.grid().dz();
}

double mean(const ScalarField& field) { return integrate(field) / (field.grid().Lx * field.grid().Lz); }

ScalarField remove_mean(const ScalarField& field) {
    const double m = mean(field);
    ScalarField out = field;
    for (double& v : out.values()) v -= m;
    return out;
}

ScalarField spectral_resample(const ScalarField& field, const GridSpec& target) {
    detail::require_finite(field, "spectral_resample");
    const GridSpec& g = field.grid();
    if (g.Lx != target.Lx || g.Lz != target.Lz)
        throw std::invalid_argument("spectral_resample: box size mismatch");
    Workspace& src = workspace_for(g);
    src.load(field);
    Workspace& dst = workspace_for(target);
    auto* ss = src.spec();
    auto* ds = dst.spec();
    std::fill(ds, ds + static_cast<std::size_t>(target.nx) * dst.nzh(), std::complex<double>(0.0));
    // Index-space spectra carry the grid's sample-offset phase; re-anchor
    // each mode to the target grid's first sample.
    const double dx0 = target.x0() - g.x0();
    const double dz0 = target.z0() - g.z0();
    const double fix = static_cast<double>(target.nx) * target.nz / (static_cast<double>(g.nx) * g.nz);
    for (int i = 0; i < g.nx; ++i) {
        if (i == g.nx / 2) continue;  // source Nyquist: sign-ambiguous, dropped
        const int mx = (i <= g.nx / 2) ? i : i - g.nx;
        if (mx > target.nx / 2 - 1 || mx < -(target.nx / 2 - 1)) continue;
        const int ti = (mx >= 0) ? mx : mx + target.nx;
        const double kx = kTwoPi * mx / g.Lx;
        for (int j = 0; j < src.nzh(); ++j) {
            if (j == g.nz / 2 || j > target.nz / 2 - 1) continue;
            const double kz = kTwoPi * j / g.Lz;
            const std::complex<double> phase = std::polar(fix, kx * dx0 + kz * dz0);
            ds[dst.idx(ti, j)] = ss[src.idx(i, j)] * phase;
        }
    }
    return dst.unload(target);
}

double spectral_eval(const ScalarField& field, double x, double z) {
    detail::require_finite(field, "spectral_eval");
    const GridSpec& g = field.grid();
    Workspace& ws = workspace_for(g);
    ws.load(field);
    auto* s = ws.spec();
    const double norm = 1.0 / (static_cast<double>(g.nx) * g.nz);
    // r2c spectrum is taken relative to index space; samples sit at
    // x_i = x0 + i dx, so evaluate with the offset phase folded in.
    const double tx = (x - g.x0()) / g.dx();
    const double tz = (z - g.z0()) / g.dz();
    double acc = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        const int mx = (i <= g.nx / 2) ? i : i - g.nx;
        const double phx = kTwoPi * mx * tx / g.nx;
        for (int j = 0; j < ws.nzh(); ++j) {
            const double ph = phx + kTwoPi * j * tz / g.nz;
            const std::complex<double> c = s[ws.idx(i, j)];
            const double term = c.real() * std::cos(ph) - c.imag() * std::sin(ph);
            // z-spectrum is half-stored; every j in (0, nz/2) represents +-j.
            const double w = (j == 0 || j == g.nz / 2) ? 1.0 : 2.0;
            acc += w * term;
        }
    }
    return acc * norm;
}

namespace {
/// Portable uint64 -> double in [0,1); avoids distribution-implementation drift.
double u01(std::uint64_t& state) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x = x ^ (x >> 31);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}
}  // namespace

ScalarField random_band_limited(const GridSpec& grid, int kmax, double amplitude, std::uint64_t seed) {
    if (kmax < 1 || kmax >= grid.nx / 2 || kmax >= grid.nz / 2)
        throw std::invalid_argument("random_band_limited: kmax out of range");
    std::uint64_t state = seed ^ 0x7c0ffee5eedULL;
    ScalarField out(grid);
    // Sum of real modes with random phases; k=0 excluded so the mean is zero.
    for (int mx = -kmax; mx <= kmax; ++mx) {
        for (int mz = 0; mz <= kmax; ++mz) {
            if (mz == 0 && mx <= 0) continue;  // half-plane, no conjugate double count
            const double amp = u01(state) - 0.5;
            const double phase = kTwoPi * u01(state);
            const double kx = kTwoPi * mx / grid.Lx;
            const double kz = kTwoPi * mz / grid.Lz;
            for (int i = 0; i < grid.nx; ++i) {
                const double px = kx * grid.x(i);
                for (int j = 0; j < grid.nz; ++j) out(i, j) += amp * std::cos(px + kz * grid.z(j) + phase);
            }
        }
    }
    const double m = out.max_abs();
    if (m > 0.0) out *= amplitude / m;
    return out;
}

}  // namespace igw
