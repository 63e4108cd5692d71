#pragma once

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "anismhd/grid.hpp"

namespace anismhd {

/// Cached FFTW r2c/c2r plans for one grid shape.
///
/// Forward transforms normalize by 1/(Nx*Ny*Nz) so spectral data holds the
/// coefficients c_k of f(x) = sum_k c_k exp(i k.x). Transforms stage through
/// internal fftw-aligned buffers (guarded by a mutex), so caller arrays are
/// plain std::vector and are never modified beyond the stated output.
class Fft3 {
public:
    explicit Fft3(const Grid& g)
        : nreal_(g.size_real()), nspec_(g.size_spec()), norm_(1.0 / double(g.size_real())) {
        buf_real_ = fftw_alloc_real(nreal_);
        buf_spec_ = fftw_alloc_complex(nspec_);
        if (!buf_real_ || !buf_spec_) throw runtime_abort("fftw buffer allocation failed");
        auto n = g.shape();
        fwd_ = fftw_plan_dft_r2c_3d(n[0], n[1], n[2], buf_real_, buf_spec_, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_3d(n[0], n[1], n[2], buf_spec_, buf_real_, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw runtime_abort("fftw plan creation failed");
    }
    ~Fft3() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(buf_real_);
        fftw_free(buf_spec_);
    }
    Fft3(const Fft3&) = delete;
    Fft3& operator=(const Fft3&) = delete;

    /// real -> normalized spectral coefficients. Input is preserved.
    void forward(const std::vector<double>& in, std::vector<cplx>& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        std::memcpy(buf_real_, in.data(), nreal_ * sizeof(double));
        fftw_execute(fwd_);
        const cplx* src = reinterpret_cast<const cplx*>(buf_spec_);
        out.resize(nspec_);
        for (std::size_t i = 0; i < nspec_; ++i) out[i] = src[i] * norm_;
    }

    /// spectral coefficients -> real samples. Input is preserved.
    void backward(const std::vector<cplx>& in, std::vector<double>& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        std::memcpy(buf_spec_, in.data(), nspec_ * sizeof(cplx));
        fftw_execute(bwd_);
        out.resize(nreal_);
        std::memcpy(out.data(), buf_real_, nreal_ * sizeof(double));
    }

    /// Shared per-shape plan cache.
    static const Fft3& get(const Grid& g) {
        static std::mutex mu;
        static std::map<std::array<int, 3>, std::unique_ptr<Fft3>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[g.shape()];
        if (!slot) slot = std::make_unique<Fft3>(g);
        return *slot;
    }

private:
    std::size_t nreal_, nspec_;
    double norm_;
    double* buf_real_;
    fftw_complex* buf_spec_;
    fftw_plan fwd_, bwd_;
    mutable std::mutex mu_;
};

} // namespace anismhd
