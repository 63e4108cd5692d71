#pragma once

// Test-only reference computations, deliberately independent of the library
// paths they check: hand-rolled adaptive Simpson instead of the library's
// quadrature engine, real-space image sums instead of spectral symbols,
// mode-by-mode projector formulas instead of the production loops.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

/// Adaptive Simpson on [a, b].
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

inline double gauss3(double t, double x, double y, double z) {
    return std::pow(4.0 * M_PI * t, -1.5) * std::exp(-(x * x + y * y + z * z) / (4.0 * t));
}
inline double gauss2(double t, double x, double y) {
    return std::exp(-(x * x + y * y) / (4.0 * t)) / (4.0 * M_PI * t);
}
inline double gauss1(double t, double z) {
    return std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
}

/// N kernel directly from its defining s-integral (substituted s = u/(1-u)).
inline double n_kernel_quadrature(double t, double x, double y, double z, double tol = 1e-13) {
    auto f = [&](double u) {
        double s = u / (1.0 - u);
        double jac = 1.0 / ((1.0 - u) * (1.0 - u));
        return gauss3(t + s, x, y, z) * jac;
    };
    return integrate(f, 0.0, 1.0 - 1e-12, tol);
}

/// K kernel from its defining s-integral with the sqrt endpoint substitution.
inline double k_kernel_quadrature(double t, double x, double y, double z, double tol = 1e-13) {
    auto f = [&](double u) {
        double sigma = u / (1.0 - u);
        double s = sigma * sigma;
        double jac = 2.0 * sigma / ((1.0 - u) * (1.0 - u));
        return gauss2(t + s, x, y) * gauss1(s, z) * jac;
    };
    return integrate(f, 0.0, 1.0 - 1e-12, tol);
}

/// Mixed representation of K (Fourier horizontal, real vertical) by direct
/// s-quadrature of exp(-(t+s)kh^2) * gauss1(s, z).
inline double k_mixed_quadrature(double t, double kh, double z, double tol = 1e-13) {
    auto f = [&](double u) {
        double sigma = u / (1.0 - u);
        double s = sigma * sigma;
        double jac = 2.0 * sigma / ((1.0 - u) * (1.0 - u));
        return std::exp(-(t + s) * kh * kh) * gauss1(s, z) * jac;
    };
    return integrate(f, 0.0, 1.0 - 1e-12, tol);
}

/// int |x|^m G(t,x) dx (3D) by radial quadrature.
inline double gauss3_weighted_mass(double t, int m) {
    auto f = [&](double r) {
        return 4.0 * M_PI * std::pow(r, 2.0 + m) * gauss3(t, r, 0.0, 0.0);
    };
    return integrate(f, 0.0, 40.0 * std::sqrt(t), 1e-13);
}

/// Periodic Gaussian convolution of real samples by brute-force image sums:
/// out(x) = sum_cells sum_images G(t, x - y + m L) f(y) h^3, images in
/// {-1,0,1}^3. Cubic box of side L with n^3 samples.
inline std::vector<double> periodic_gauss_convolution(const std::vector<double>& f, int n, double L,
                                                      double t) {
    std::vector<double> out(f.size(), 0.0);
    double h = L / n;
    double cell = h * h * h;
    auto idx = [&](int i, int j, int k) { return (std::size_t(i) * n + j) * n + k; };
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                double acc = 0.0;
                for (int jx = 0; jx < n; ++jx)
                    for (int jy = 0; jy < n; ++jy)
                        for (int jz = 0; jz < n; ++jz) {
                            double dx = (ix - jx) * h, dy = (iy - jy) * h, dz = (iz - jz) * h;
                            double g = 0.0;
                            for (int mx = -1; mx <= 1; ++mx)
                                for (int my = -1; my <= 1; ++my)
                                    for (int mz = -1; mz <= 1; ++mz)
                                        g += gauss3(t, dx + mx * L, dy + my * L, dz + mz * L);
                            acc += g * f[idx(jx, jy, jz)];
                        }
                out[idx(ix, iy, iz)] = acc * cell;
            }
    return out;
}

} // namespace oracles
