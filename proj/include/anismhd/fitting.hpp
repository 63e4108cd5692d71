#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "anismhd/common.hpp"

namespace anismhd {

/// Result of a two-parameter least-squares line fit.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    int n = 0;
};

/// Ordinary least squares y = a + b x with the textbook standard error of b.
inline SlopeFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size() && x.size() >= 2, "need >= 2 points for a line fit");
    int n = int(x.size());
    double sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    require(sxx > 0.0, "degenerate abscissa in line fit");
    SlopeFit f;
    f.n = n;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += r * r;
    }
    f.slope_stderr = n > 2 ? std::sqrt(ss_res / (n - 2) / sxx) : 0.0;
    return f;
}

/// Options for decay-rate extraction from a (t, value) series.
struct RateFitOptions {
    /// Added to t before taking logs. Gaussian-family data of heat age t0
    /// follows (t + t0)^(-rate) exactly; generators report t0 here.
    double time_offset = 0.0;
    /// Divide values by log(2 + t) before fitting (series with a known
    /// logarithmic correction factor).
    bool log_correction = false;
    /// Relaxed precondition thresholds.
    int min_points = 6;
    double min_decades = 1.0;
};

/// Log-log least-squares slope of value vs (t + offset).
/// Requires >= min_points strictly positive values spanning >= min_decades.
inline SlopeFit fit_power_law(const std::vector<double>& t, const std::vector<double>& value,
                              const RateFitOptions& opt = {}) {
    require(t.size() == value.size(), "mismatched series lengths");
    require(int(t.size()) >= opt.min_points,
            "need >= " + std::to_string(opt.min_points) + " samples, got " + std::to_string(t.size()));
    std::vector<double> lx(t.size()), ly(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        double ti = t[i] + opt.time_offset;
        require(ti > 0.0, "non-positive abscissa in power-law fit");
        double vi = value[i];
        if (opt.log_correction) vi /= std::log(2.0 + t[i]);
        require(vi > 0.0, "non-positive value in power-law fit at t = " + std::to_string(t[i]));
        lx[i] = std::log(ti);
        ly[i] = std::log(vi);
    }
    double span = (*std::max_element(lx.begin(), lx.end()) -
                   *std::min_element(lx.begin(), lx.end())) / std::log(10.0);
    require(span >= opt.min_decades - 1e-12,
            "samples span " + std::to_string(span) + " decades, need >= " +
                std::to_string(opt.min_decades));
    return least_squares_line(lx, ly);
}

/// n geometrically spaced samples in [lo, hi].
inline std::vector<double> geometric_samples(double lo, double hi, int n) {
    require(lo > 0.0 && hi > lo, "geometric range needs 0 < lo < hi");
    require(n >= 2, "need >= 2 samples");
    std::vector<double> out(n);
    double r = std::pow(hi / lo, 1.0 / (n - 1));
    double v = lo;
    for (int i = 0; i < n; ++i) {
        out[i] = v;
        v *= r;
    }
    out.back() = hi;
    return out;
}

} // namespace anismhd
