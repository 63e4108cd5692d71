#pragma once

#include <array>
#include <memory>
#include <vector>

#include "anismhd/common.hpp"

namespace anismhd {

/// Uniform periodic box [0,Lh) x [0,Lh) x [0,Lv) with even resolutions.
///
/// Wavenumbers are 2*pi*n/L with n in the symmetric integer range; the
/// Nyquist mode is zeroed when building derivative factors. Real-space
/// storage is row-major (x slowest, z fastest); the spectral mirror is the
/// half-complex r2c layout with the z axis halved to Nz/2+1 entries.
class Grid {
public:
    Grid(double box_h, double box_v, std::array<int, 3> n)
        : Lh_(box_h), Lv_(box_v), n_(n) {
        require(box_h > 0.0 && box_v > 0.0, "box lengths must be positive");
        for (int d = 0; d < 3; ++d) {
            require(n[d] >= 8, "resolution must be >= 8, got " + std::to_string(n[d]));
            require(n[d] % 2 == 0, "resolution must be even, got " + std::to_string(n[d]));
        }
        for (int d = 0; d < 3; ++d) {
            double L = axis_length(d);
            wave_[d].resize(n[d]);
            deriv_wave_[d].resize(n[d]);
            for (int i = 0; i < n[d]; ++i) {
                int m = (i <= n[d] / 2) ? i : i - n[d];
                if (i == n[d] / 2) m = -n[d] / 2; // Nyquist, sign convention only
                wave_[d][i] = two_pi * m / L;
                deriv_wave_[d][i] = (i == n[d] / 2) ? 0.0 : wave_[d][i];
            }
        }
    }

    double box_h() const { return Lh_; }
    double box_v() const { return Lv_; }
    double axis_length(int d) const { return d == 2 ? Lv_ : Lh_; }
    int nx() const { return n_[0]; }
    int ny() const { return n_[1]; }
    int nz() const { return n_[2]; }
    std::array<int, 3> shape() const { return n_; }

    std::size_t size_real() const { return std::size_t(n_[0]) * n_[1] * n_[2]; }
    int nz_half() const { return n_[2] / 2 + 1; }
    std::size_t size_spec() const { return std::size_t(n_[0]) * n_[1] * nz_half(); }

    double spacing(int d) const { return axis_length(d) / n_[d]; }
    double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }
    double volume() const { return Lh_ * Lh_ * Lv_; }

    /// Physical coordinate of grid index along axis d, in [0, L).
    double coord(int d, int i) const { return spacing(d) * i; }
    /// Coordinate measured from the box center (weights, moments).
    double centered_coord(int d, int i) const { return coord(d, i) - 0.5 * axis_length(d); }

    /// Wavenumber of mode index i along axis d (full symmetric range).
    double wavenumber(int d, int i) const { return wave_[d][i]; }
    /// Wavenumber with the Nyquist mode zeroed; use for differentiation.
    double deriv_wavenumber(int d, int i) const { return deriv_wave_[d][i]; }

    std::size_t spec_index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * n_[1] + iy) * nz_half() + iz;
    }
    std::size_t real_index(int ix, int iy, int iz) const {
        return (std::size_t(ix) * n_[1] + iy) * n_[2] + iz;
    }

    /// Parseval weight of an r2c entry: interior z modes represent a
    /// conjugate pair, the z=0 and Nyquist planes are self-conjugate.
    double hermitian_weight(int iz) const { return (iz == 0 || iz == n_[2] / 2) ? 1.0 : 2.0; }

    /// Sharp 2/3-rule mask: true if the mode is kept.
    bool dealias_keep(int ix, int iy, int iz, double fraction = 2.0 / 3.0) const {
        auto keep = [&](int i, int n) {
            int m = (i <= n / 2) ? i : i - n;
            return std::abs(m) <= int(fraction * (n / 2));
        };
        return keep(ix, n_[0]) && keep(iy, n_[1]) && keep(iz, n_[2]);
    }

    bool same_layout(const Grid& other) const {
        return n_ == other.n_ && Lh_ == other.Lh_ && Lv_ == other.Lv_;
    }

private:
    double Lh_, Lv_;
    std::array<int, 3> n_;
    std::array<std::vector<double>, 3> wave_, deriv_wave_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(double box_h, double box_v, std::array<int, 3> n) {
    return std::make_shared<const Grid>(box_h, box_v, n);
}

} // namespace anismhd
