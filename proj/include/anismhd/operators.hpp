#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "anismhd/field.hpp"

namespace anismhd {

namespace detail {

/// Apply a spectral multiplier m(ix,iy,iz) to coefficients in place.
template <typename Fn>
void apply_multiplier(const Grid& g, std::vector<cplx>& c, Fn&& m) {
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz_half(); ++iz) c[g.spec_index(ix, iy, iz)] *= m(ix, iy, iz);
}

inline cplx ipow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace detail

/// Spectral partial derivative d^a f; exact for resolved trigonometric data.
/// Nyquist modes are zeroed on any differentiated axis.
inline ScalarField derivative(const ScalarField& f, DerivativeIndex a) {
    require(a.a1 >= 0 && a.a2 >= 0 && a.a3 >= 0, "derivative orders must be non-negative");
    require(a.order() <= 2, "derivative order " + std::to_string(a.order()) + " unsupported (max 2)");
    const Grid& g = f.grid();
    std::vector<cplx> c = f.spectral();
    detail::apply_multiplier(g, c, [&](int ix, int iy, int iz) {
        double kx = g.deriv_wavenumber(0, ix);
        double ky = g.deriv_wavenumber(1, iy);
        double kz = g.deriv_wavenumber(2, iz);
        double mag = std::pow(kx, a.a1) * std::pow(ky, a.a2) * std::pow(kz, a.a3);
        return detail::ipow(a.order()) * mag;
    });
    return ScalarField::from_spectral(f.grid_ptr(), std::move(c));
}

inline VectorField derivative(const VectorField& f, DerivativeIndex a) {
    return VectorField(derivative(f.comp(0), a), derivative(f.comp(1), a), derivative(f.comp(2), a));
}

/// Spectral divergence of a vector field.
inline ScalarField divergence(const VectorField& f) {
    const Grid& g = f.grid();
    std::vector<cplx> out(g.size_spec(), cplx(0.0, 0.0));
    for (int d = 0; d < 3; ++d) {
        const auto& c = f.comp(d).spectral();
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy)
                for (int iz = 0; iz < g.nz_half(); ++iz) {
                    double k = d == 0   ? g.deriv_wavenumber(0, ix)
                               : d == 1 ? g.deriv_wavenumber(1, iy)
                                        : g.deriv_wavenumber(2, iz);
                    std::size_t idx = g.spec_index(ix, iy, iz);
                    out[idx] += cplx(0.0, k) * c[idx];
                }
    }
    return ScalarField::from_spectral(f.grid_ptr(), std::move(out));
}

/// Largest |divergence| coefficient relative to the largest field coefficient.
inline double divergence_max_relative(const VectorField& f) {
    const Grid& g = f.grid();
    double div_max = 0.0, amp_max = 0.0;
    std::array<const std::vector<cplx>*, 3> c = {&f.comp(0).spectral(), &f.comp(1).spectral(),
                                                 &f.comp(2).spectral()};
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz_half(); ++iz) {
                std::size_t idx = g.spec_index(ix, iy, iz);
                double kx = g.deriv_wavenumber(0, ix);
                double ky = g.deriv_wavenumber(1, iy);
                double kz = g.deriv_wavenumber(2, iz);
                cplx dv = cplx(0.0, kx) * (*c[0])[idx] + cplx(0.0, ky) * (*c[1])[idx] +
                          cplx(0.0, kz) * (*c[2])[idx];
                div_max = std::max(div_max, std::abs(dv));
                double amp = std::max({std::abs((*c[0])[idx]), std::abs((*c[1])[idx]),
                                       std::abs((*c[2])[idx])});
                amp_max = std::max(amp_max, amp);
            }
    return amp_max > 0.0 ? div_max / amp_max : 0.0;
}

namespace detail {

/// In-place Helmholtz projection of spectral components onto divergence-free
/// fields: c <- c - k (k.c)/|k|^2. The mean mode is untouched.
inline void project_spectral(const Grid& g, std::array<std::vector<cplx>, 3>& c) {
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz_half(); ++iz) {
                double kx = g.deriv_wavenumber(0, ix);
                double ky = g.deriv_wavenumber(1, iy);
                double kz = g.deriv_wavenumber(2, iz);
                double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                std::size_t idx = g.spec_index(ix, iy, iz);
                cplx kdotc = kx * c[0][idx] + ky * c[1][idx] + kz * c[2][idx];
                c[0][idx] -= kx * kdotc / k2;
                c[1][idx] -= ky * kdotc / k2;
                c[2][idx] -= kz * kdotc / k2;
            }
}

} // namespace detail

/// Leray projection onto divergence-free fields (idempotent; mean untouched).
inline VectorField project_div_free(const VectorField& f) {
    require(f.finite(), "project_div_free: field has non-finite values");
    std::array<std::vector<cplx>, 3> c = {f.comp(0).spectral(), f.comp(1).spectral(),
                                          f.comp(2).spectral()};
    detail::project_spectral(f.grid(), c);
    return VectorField::from_spectral(f.grid_ptr(), std::move(c));
}

/// Zero all modes outside the sharp 2/3 band, in place on spectral data.
inline void dealias(const Grid& g, std::vector<cplx>& c, double fraction = 2.0 / 3.0) {
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz_half(); ++iz)
                if (!g.dealias_keep(ix, iy, iz, fraction)) c[g.spec_index(ix, iy, iz)] = 0.0;
}

} // namespace anismhd
