#pragma once

#include <cmath>
#include <random>
#include <string>

#include "anismhd/kernels.hpp"
#include "anismhd/norms.hpp"
#include "anismhd/operators.hpp"

namespace anismhd {

/// Localized initial data produced by a named generator, together with the
/// metadata rate fits need. heat_age is the effective diffusion time already
/// baked into a Gaussian-envelope profile (0 for compactly supported bumps):
/// semigroup output at time t then lies on the heat orbit at age t + heat_age.
struct InitField {
    VectorField field;
    std::string generator;
    double heat_age = 0.0;
    double amplitude = 0.0;
};

namespace detail {

/// Fill a scalar by sampling fn(xc, yc, zc) in centered coordinates.
template <typename Fn>
ScalarField sample_centered(GridPtr g, Fn&& fn) {
    ScalarField f(g);
    auto& v = f.mutable_real();
    for (int ix = 0; ix < g->nx(); ++ix) {
        double x = g->centered_coord(0, ix);
        for (int iy = 0; iy < g->ny(); ++iy) {
            double y = g->centered_coord(1, iy);
            for (int iz = 0; iz < g->nz(); ++iz) {
                double z = g->centered_coord(2, iz);
                v[g->real_index(ix, iy, iz)] = fn(x, y, z);
            }
        }
    }
    return f;
}

inline double gauss_env(double r2, double four_a) { return std::exp(-r2 / four_a); }

/// C-infinity bump, identically zero outside radius R.
inline double bump_env(double r2, double R) {
    double s = r2 / (R * R);
    return s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
}

/// Spectral curl of a vector potential; exactly divergence-free on the grid.
inline VectorField curl(const VectorField& A) {
    auto d = [&](int comp, int axis) {
        DerivativeIndex a;
        (axis == 0 ? a.a1 : axis == 1 ? a.a2 : a.a3) = 1;
        return derivative(A.comp(comp), a);
    };
    ScalarField c1 = d(2, 1), c1b = d(1, 2);
    ScalarField c2 = d(0, 2), c2b = d(2, 0);
    ScalarField c3 = d(1, 0), c3b = d(0, 1);
    auto sub = [](ScalarField a, const ScalarField& b) {
        auto& va = a.mutable_real();
        const auto& vb = b.real();
        for (std::size_t i = 0; i < va.size(); ++i) va[i] -= vb[i];
        return a;
    };
    return VectorField(sub(std::move(c1), c1b), sub(std::move(c2), c2b), sub(std::move(c3), c3b));
}

inline void scale_in_place(VectorField& f, double s) {
    for (int d = 0; d < 3; ++d)
        for (auto& v : f.comp(d).mutable_real()) v *= s;
}

} // namespace detail

/// v = (-d3 A2, 0, d1 A2) with A2 a separable Gaussian envelope of
/// horizontal age and vertical age `age`. Divergence-free by construction;
/// the vertical component is a pure horizontal derivative.
inline InitField init_hderiv_gauss(GridPtr g, double amplitude, double age) {
    auto A2 = detail::sample_centered(g, [&](double x, double y, double z) {
        return gauss2_value(age, x, y) * gauss1_value(age, z);
    });
    ScalarField zero(g);
    VectorField A(std::move(zero), std::move(A2), ScalarField(g));
    VectorField v = detail::curl(A);
    double peak = v.max_abs();
    require(peak > 0.0, "degenerate init data");
    detail::scale_in_place(v, amplitude / peak);
    return {std::move(v), "hderiv_gauss", age, amplitude};
}

/// Control data: the same separable Gaussian profile placed directly in the
/// vertical component (nonzero horizontal integral, not divergence-free).
inline InitField init_blob3(GridPtr g, double amplitude, double age) {
    auto b = detail::sample_centered(g, [&](double x, double y, double z) {
        return gauss2_value(age, x, y) * gauss1_value(age, z);
    });
    auto& v = b.mutable_real();
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    for (double& x : v) x *= amplitude / peak;
    return {VectorField(ScalarField(g), ScalarField(g), std::move(b)), "blob3", age, amplitude};
}

/// Curl of a Gaussian-envelope vector potential with seeded coefficients and
/// small seeded center shifts: generic localized divergence-free data with
/// zero integral and finite first moments.
inline InitField init_curl_gauss(GridPtr g, double amplitude, double age, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0; };
    std::array<ScalarField, 3> comps = {ScalarField(g), ScalarField(g), ScalarField(g)};
    double shift_scale = 0.5 * std::sqrt(age);
    for (int c = 0; c < 3; ++c) {
        double amp = unit();
        double sx = shift_scale * unit(), sy = shift_scale * unit(), sz = shift_scale * unit();
        comps[c] = detail::sample_centered(g, [&](double x, double y, double z) {
            return amp * gauss2_value(age, x - sx, y - sy) * gauss1_value(age, z - sz);
        });
    }
    VectorField A(std::move(comps[0]), std::move(comps[1]), std::move(comps[2]));
    VectorField v = detail::curl(A);
    double peak = v.max_abs();
    require(peak > 0.0, "degenerate init data (seed produced zero potential)");
    detail::scale_in_place(v, amplitude / peak);
    return {std::move(v), "curl_gauss", age, amplitude};
}

/// Curl of a compactly supported bump potential (exactly zero outside
/// radius R); no heat age.
inline InitField init_bump_curl(GridPtr g, double amplitude, double radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0; };
    std::array<ScalarField, 3> comps = {ScalarField(g), ScalarField(g), ScalarField(g)};
    for (int c = 0; c < 3; ++c) {
        double amp = unit();
        double px = unit(), py = unit(), pz = unit();
        comps[c] = detail::sample_centered(g, [&](double x, double y, double z) {
            double r2 = x * x + y * y + z * z;
            // polynomial factor keeps the three components independent
            return amp * (1.0 + 0.3 * (px * x + py * y + pz * z) / radius) *
                   detail::bump_env(r2, radius);
        });
    }
    VectorField A(std::move(comps[0]), std::move(comps[1]), std::move(comps[2]));
    VectorField v = detail::curl(A);
    double peak = v.max_abs();
    require(peak > 0.0, "degenerate init data");
    detail::scale_in_place(v, amplitude / peak);
    return {std::move(v), "bump_curl", 0.0, amplitude};
}

/// Named-generator dispatch used by campaign configs.
inline InitField make_init_field(const std::string& name, GridPtr g, double amplitude,
                                 double width, std::uint64_t seed) {
    if (name == "hderiv_gauss") return init_hderiv_gauss(g, amplitude, width);
    if (name == "blob3") return init_blob3(g, amplitude, width);
    if (name == "curl_gauss") return init_curl_gauss(g, amplitude, width, seed);
    if (name == "bump_curl") return init_bump_curl(g, amplitude, width, seed);
    throw precondition_error("unknown init generator '" + name + "'");
}

/// True if the field's support (above tol * peak) stays inside the middle
/// half of the box along every axis. Spectrally differentiated data carries
/// grid-scale ringing, so callers pick tol by resolution.
inline bool is_localized(const VectorField& f, double rel_tol = 1e-6) {
    const Grid& g = f.grid();
    double peak = f.max_abs();
    if (peak == 0.0) return true;
    double tol = rel_tol * peak;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                bool inside = std::abs(g.centered_coord(0, ix)) <= 0.25 * g.axis_length(0) &&
                              std::abs(g.centered_coord(1, iy)) <= 0.25 * g.axis_length(1) &&
                              std::abs(g.centered_coord(2, iz)) <= 0.25 * g.axis_length(2);
                if (inside) continue;
                std::size_t i = g.real_index(ix, iy, iz);
                double mag = 0.0;
                for (int d = 0; d < 3; ++d) {
                    double v = f.comp(d).real()[i];
                    mag += v * v;
                }
                if (std::sqrt(mag) > tol) return false;
            }
    return true;
}

} // namespace anismhd
