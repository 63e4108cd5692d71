#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "anismhd/fft.hpp"
#include "anismhd/grid.hpp"

namespace anismhd {

/// One real scalar sampled on a grid, with a lazily computed spectral mirror.
class ScalarField {
public:
    explicit ScalarField(GridPtr g) : grid_(std::move(g)), real_(grid_->size_real(), 0.0) {}

    ScalarField(GridPtr g, std::vector<double> data) : grid_(std::move(g)), real_(std::move(data)) {
        require(real_.size() == grid_->size_real(), "scalar data size does not match grid");
    }

    static ScalarField from_spectral(GridPtr g, std::vector<cplx> coeffs) {
        require(coeffs.size() == g->size_spec(), "spectral data size does not match grid");
        ScalarField f(g);
        Fft3::get(*g).backward(coeffs, f.real_);
        f.spec_ = std::move(coeffs);
        return f;
    }

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }

    const std::vector<double>& real() const { return real_; }
    double& at(int ix, int iy, int iz) {
        spec_.reset();
        return real_[grid_->real_index(ix, iy, iz)];
    }
    double at(int ix, int iy, int iz) const { return real_[grid_->real_index(ix, iy, iz)]; }

    /// Mutable access to the raw samples; invalidates the mirror.
    std::vector<double>& mutable_real() {
        spec_.reset();
        return real_;
    }

    const std::vector<cplx>& spectral() const {
        if (!spec_) {
            spec_.emplace(grid_->size_spec());
            Fft3::get(*grid_).forward(real_, *spec_);
        }
        return *spec_;
    }

    bool finite() const {
        return std::all_of(real_.begin(), real_.end(), [](double v) { return std::isfinite(v); });
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : real_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    GridPtr grid_;
    std::vector<double> real_;
    mutable std::optional<std::vector<cplx>> spec_;
};

/// Three-component real vector field with per-component spectral mirrors.
class VectorField {
public:
    explicit VectorField(GridPtr g) : comps_{ScalarField(g), ScalarField(g), ScalarField(g)} {}

    VectorField(ScalarField c1, ScalarField c2, ScalarField c3)
        : comps_{std::move(c1), std::move(c2), std::move(c3)} {
        require(comps_[0].grid().same_layout(comps_[1].grid()) &&
                    comps_[0].grid().same_layout(comps_[2].grid()),
                "vector components live on different grids");
    }

    static VectorField from_spectral(GridPtr g, std::array<std::vector<cplx>, 3> coeffs) {
        return VectorField(ScalarField::from_spectral(g, std::move(coeffs[0])),
                           ScalarField::from_spectral(g, std::move(coeffs[1])),
                           ScalarField::from_spectral(g, std::move(coeffs[2])));
    }

    const Grid& grid() const { return comps_[0].grid(); }
    GridPtr grid_ptr() const { return comps_[0].grid_ptr(); }

    const ScalarField& comp(int i) const { return comps_[i]; }
    ScalarField& comp(int i) { return comps_[i]; }

    bool finite() const { return comps_[0].finite() && comps_[1].finite() && comps_[2].finite(); }

    double max_abs() const {
        double m = 0.0;
        const auto& a = comps_[0].real();
        const auto& b = comps_[1].real();
        const auto& c = comps_[2].real();
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]));
        return m;
    }

private:
    std::array<ScalarField, 3> comps_;
};

/// Velocity/magnetic pair at one instant.
struct MHDState {
    VectorField u;
    VectorField B;
    double t = 0.0;

    MHDState(VectorField u_, VectorField B_, double t_ = 0.0)
        : u(std::move(u_)), B(std::move(B_)), t(t_) {
        require(u.grid().same_layout(B.grid()), "u and B grids differ");
    }
};

} // namespace anismhd
