#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "anismhd/field.hpp"

namespace anismhd {

namespace detail {

/// L^q of a sampled line with uniform weight h (max norm when q = inf).
inline double line_norm(const std::vector<double>& vals, double h, Exponent q) {
    if (q.is_inf()) {
        double m = 0.0;
        for (double v : vals) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (double v : vals) s += std::pow(std::abs(v), q.value);
    return std::pow(s * h, 1.0 / q.value);
}

/// Anisotropic norm of pointwise values given by sampler(ix,iy,iz):
/// inner L^q over the vertical axis, outer L^p over the horizontal plane.
/// Periodic uniform-grid Riemann sum; exact for trigonometric polynomials.
inline double aniso_norm_impl(const Grid& g, Exponent p, Exponent q,
                              const std::function<double(int, int, int)>& sampler) {
    double hz = g.spacing(2);
    double hxy = g.spacing(0) * g.spacing(1);
    std::vector<double> line(g.nz());
    double outer = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) {
            for (int iz = 0; iz < g.nz(); ++iz) line[iz] = sampler(ix, iy, iz);
            double w = line_norm(line, hz, q);
            if (p.is_inf())
                outer = std::max(outer, w);
            else
                outer += std::pow(w, p.value) * hxy;
        }
    return p.is_inf() ? outer : std::pow(outer, 1.0 / p.value);
}

} // namespace detail

/// || ||f(x_h,.)||_{L^q_v} ||_{L^p_h} of a scalar component.
inline double aniso_norm(const ScalarField& f, Exponent p, Exponent q) {
    require(f.finite(), "aniso_norm: non-finite values");
    const Grid& g = f.grid();
    const auto& v = f.real();
    return detail::aniso_norm_impl(g, p, q, [&](int ix, int iy, int iz) {
        return v[g.real_index(ix, iy, iz)];
    });
}

/// Anisotropic norm of the pointwise Euclidean magnitude of a vector field.
inline double aniso_norm(const VectorField& f, Exponent p, Exponent q) {
    require(f.finite(), "aniso_norm: non-finite values");
    const Grid& g = f.grid();
    const auto& a = f.comp(0).real();
    const auto& b = f.comp(1).real();
    const auto& c = f.comp(2).real();
    return detail::aniso_norm_impl(g, p, q, [&](int ix, int iy, int iz) {
        std::size_t i = g.real_index(ix, iy, iz);
        return std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
    });
}

/// Plain L^p norm (p = q).
inline double lp_norm(const ScalarField& f, Exponent p) { return aniso_norm(f, p, p); }
inline double lp_norm(const VectorField& f, Exponent p) { return aniso_norm(f, p, p); }

enum class WeightKind { Full, Horizontal }; // |x|^m vs |x_h|^m

/// Norm of weight * f with the weight measured from the box center.
/// m = 0 reduces to aniso_norm.
template <typename FieldT>
double weighted_norm(const FieldT& f, WeightKind kind, int m, Exponent p, Exponent q) {
    require(m == 0 || m == 1, "weight order must be 0 or 1");
    if (m == 0) return aniso_norm(f, p, q);
    const Grid& g = f.grid();
    auto weight = [&](int ix, int iy, int iz) {
        double x = g.centered_coord(0, ix);
        double y = g.centered_coord(1, iy);
        double z = g.centered_coord(2, iz);
        double r2 = x * x + y * y + (kind == WeightKind::Full ? z * z : 0.0);
        return std::sqrt(r2);
    };
    if constexpr (std::is_same_v<FieldT, ScalarField>) {
        const auto& v = f.real();
        return detail::aniso_norm_impl(g, p, q, [&](int ix, int iy, int iz) {
            return weight(ix, iy, iz) * v[g.real_index(ix, iy, iz)];
        });
    } else {
        const auto& a = f.comp(0).real();
        const auto& b = f.comp(1).real();
        const auto& c = f.comp(2).real();
        return detail::aniso_norm_impl(g, p, q, [&](int ix, int iy, int iz) {
            std::size_t i = g.real_index(ix, iy, iz);
            return weight(ix, iy, iz) * std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
        });
    }
}

/// L^2 norm computed in spectral space (Parseval).
inline double l2_norm_spectral(const ScalarField& f) {
    const Grid& g = f.grid();
    const auto& c = f.spectral();
    double s = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz_half(); ++iz)
                s += g.hermitian_weight(iz) * std::norm(c[g.spec_index(ix, iy, iz)]);
    return std::sqrt(s * g.volume());
}

inline double l2_norm_spectral(const VectorField& f) {
    double s = 0.0;
    for (int d = 0; d < 3; ++d) {
        double n = l2_norm_spectral(f.comp(d));
        s += n * n;
    }
    return std::sqrt(s);
}

/// Squared Sobolev seminorm sum_{|a|=s} ||d^a f||_2^2 via spectral weights,
/// returned for s = 0..max_order (diagnostic; max_order <= 4).
inline std::vector<double> sobolev_seminorms_sq(const VectorField& f, int max_order) {
    require(max_order >= 0 && max_order <= 4, "sobolev order must be in [0,4]");
    const Grid& g = f.grid();
    std::vector<double> out(max_order + 1, 0.0);
    for (int d = 0; d < 3; ++d) {
        const auto& c = f.comp(d).spectral();
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy)
                for (int iz = 0; iz < g.nz_half(); ++iz) {
                    double kx = g.deriv_wavenumber(0, ix);
                    double ky = g.deriv_wavenumber(1, iy);
                    double kz = g.deriv_wavenumber(2, iz);
                    double k2 = kx * kx + ky * ky + kz * kz;
                    double e = g.hermitian_weight(iz) * std::norm(c[g.spec_index(ix, iy, iz)]) *
                               g.volume();
                    double pw = 1.0;
                    for (int s = 0; s <= max_order; ++s) {
                        out[s] += pw * e;
                        pw *= k2;
                    }
                }
    }
    return out;
}

/// H^s norm with the standard (1+|k|^2)^s weight.
inline double hs_norm(const VectorField& f, int s) {
    require(s >= 0 && s <= 4, "hs_norm order must be in [0,4]");
    const Grid& g = f.grid();
    double total = 0.0;
    for (int d = 0; d < 3; ++d) {
        const auto& c = f.comp(d).spectral();
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy)
                for (int iz = 0; iz < g.nz_half(); ++iz) {
                    double kx = g.deriv_wavenumber(0, ix);
                    double ky = g.deriv_wavenumber(1, iy);
                    double kz = g.deriv_wavenumber(2, iz);
                    double k2 = kx * kx + ky * ky + kz * kz;
                    total += g.hermitian_weight(iz) * std::pow(1.0 + k2, s) *
                             std::norm(c[g.spec_index(ix, iy, iz)]) * g.volume();
                }
    }
    return std::sqrt(total);
}

} // namespace anismhd
