#include "igw/coordpoly.hpp"

namespace igw {

namespace {
struct Mono {
    int p, q;
};
constexpr Mono kMono[CoordPolyField::kSlots] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
}  // namespace

int CoordPolyField::slot(int p, int q) {
    for (int s = 0; s < kSlots; ++s)
        if (kMono[s].p == p && kMono[s].q == q) return s;
    throw std::invalid_argument("CoordPolyField: coordinate degree above 2");
}

void CoordPolyField::add(int p, int q, const ScalarField& f) {
    if (grid_.size() == 0) grid_ = f.grid();
    ScalarField& c = comp_[slot(p, q)];
    if (c.empty())
        c = f;
    else
        c += f;
}

CoordPolyField& CoordPolyField::operator+=(const CoordPolyField& o) {
    for (int s = 0; s < kSlots; ++s)
        if (!o.comp_[s].empty()) add(kMono[s].p, kMono[s].q, o.comp_[s]);
    return *this;
}

CoordPolyField& CoordPolyField::operator-=(const CoordPolyField& o) {
    for (int s = 0; s < kSlots; ++s)
        if (!o.comp_[s].empty()) add(kMono[s].p, kMono[s].q, -1.0 * o.comp_[s]);
    return *this;
}

CoordPolyField& CoordPolyField::operator*=(double s) {
    for (auto& c : comp_)
        if (!c.empty()) c *= s;
    return *this;
}

CoordPolyField CoordPolyField::scaled_by(const ScalarField& f) const {
    CoordPolyField out(grid_);
    for (int s = 0; s < kSlots; ++s)
        if (!comp_[s].empty()) out.add(kMono[s].p, kMono[s].q, multiply_dealiased(comp_[s], f));
    return out;
}

CoordPolyField CoordPolyField::ddx() const {
    CoordPolyField out(grid_);
    for (int s = 0; s < kSlots; ++s) {
        if (comp_[s].empty()) continue;
        const auto [p, q] = kMono[s];
        out.add(p, q, igw::ddx(comp_[s]));
        if (p > 0) out.add(p - 1, q, static_cast<double>(p) * comp_[s]);
    }
    return out;
}

CoordPolyField CoordPolyField::ddz() const {
    CoordPolyField out(grid_);
    for (int s = 0; s < kSlots; ++s) {
        if (comp_[s].empty()) continue;
        const auto [p, q] = kMono[s];
        out.add(p, q, igw::ddz(comp_[s]));
        if (q > 0) out.add(p, q - 1, static_cast<double>(q) * comp_[s]);
    }
    return out;
}

ScalarField CoordPolyField::collapse() const {
    ScalarField out(grid_);
    for (int s = 0; s < kSlots; ++s) {
        if (comp_[s].empty()) continue;
        const auto [p, q] = kMono[s];
        auto ov = out.values();
        const auto& c = comp_[s];
        for (int i = 0; i < grid_.nx; ++i) {
            const double xw = (p == 0) ? 1.0 : (p == 1 ? grid_.x(i) : grid_.x(i) * grid_.x(i));
            for (int j = 0; j < grid_.nz; ++j) {
                const double zw = (q == 0) ? 1.0 : (q == 1 ? grid_.z(j) : grid_.z(j) * grid_.z(j));
                ov[static_cast<std::size_t>(i) * grid_.nz + j] += xw * zw * c(i, j);
            }
        }
    }
    return out;
}

int CoordPolyField::degree() const {
    int d = 0;
    for (int s = 0; s < kSlots; ++s)
        if (!comp_[s].empty()) d = std::max(d, kMono[s].p + kMono[s].q);
    return d;
}

CoordPolyField multiply(const CoordPolyField& a, const CoordPolyField& b) {
    CoordPolyField out(a.grid());
    for (int sa = 0; sa < CoordPolyField::kSlots; ++sa) {
        if (a.comp(kMono[sa].p, kMono[sa].q).empty()) continue;
        for (int sb = 0; sb < CoordPolyField::kSlots; ++sb) {
            if (b.comp(kMono[sb].p, kMono[sb].q).empty()) continue;
            const int p = kMono[sa].p + kMono[sb].p;
            const int q = kMono[sa].q + kMono[sb].q;
            out.add(p, q, multiply_dealiased(a.comp(kMono[sa].p, kMono[sa].q),
                                             b.comp(kMono[sb].p, kMono[sb].q)));
        }
    }
    return out;
}

CoordPolyField cp_jacobian(const CoordPolyField& a, const CoordPolyField& b) {
    return multiply(a.ddx(), b.ddz()) - multiply(a.ddz(), b.ddx());
}

}  // namespace igw
