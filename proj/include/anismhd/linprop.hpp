#pragma once

#include <string>
#include <vector>

#include "anismhd/initdata.hpp"
#include "anismhd/kernels.hpp"
#include "anismhd/series.hpp"

namespace anismhd {

/// Exact spectral heat semigroups: symbols exp(-t|k|^2) and exp(-t|k_h|^2).
enum class PropagatorKind { FullHeat, HorizHeat };

inline std::string propagator_name(PropagatorKind k) {
    return k == PropagatorKind::FullHeat ? "FullHeat" : "HorizHeat";
}

inline ScalarField apply_semigroup(PropagatorKind kind, const ScalarField& f, double t) {
    require(t >= 0.0, "semigroup time must be >= 0");
    if (t == 0.0) return f;
    KernelSpec spec;
    spec.kind = kind == PropagatorKind::FullHeat ? KernelKind::Gauss3 : KernelKind::Gauss2;
    return convolve_kernel(spec, f, t);
}

inline VectorField apply_semigroup(PropagatorKind kind, const VectorField& f, double t) {
    return VectorField(apply_semigroup(kind, f.comp(0), t), apply_semigroup(kind, f.comp(1), t),
                       apply_semigroup(kind, f.comp(2), t));
}

/// Largest window end on this box before torus-gap decay contaminates
/// algebraic rates: c * (L/2pi)^2 with the smaller box length.
inline double intermediate_window_cap(const Grid& g, double c = 0.05) {
    double L = std::min(g.box_h(), g.box_v());
    double gap = two_pi / L;
    return c / (gap * gap);
}

/// Which scalar quantity of a propagated field a decay experiment measures.
enum class ComponentSelector { Vertical, Horizontal, Magnitude };

inline std::string component_name(ComponentSelector c) {
    switch (c) {
        case ComponentSelector::Vertical: return "comp3";
        case ComponentSelector::Horizontal: return "comp_h";
        default: return "mag";
    }
}

struct DecayExperimentRequest {
    PropagatorKind kind = PropagatorKind::HorizHeat;
    ComponentSelector selector = ComponentSelector::Vertical;
    std::vector<std::pair<Exponent, Exponent>> pq;
    std::vector<double> t_samples;
    DerivativeIndex alpha; // optional derivative applied before measuring
};

/// Propagate localized data across the sample times and record anisotropic
/// norms. Sample times must sit inside the intermediate window; data must be
/// supported in the middle half of the box.
inline std::vector<NormSeries> linear_decay_experiment(const DecayExperimentRequest& req,
                                                       const InitField& init) {
    require(!req.t_samples.empty() && !req.pq.empty(), "empty experiment request");
    const Grid& g = init.field.grid();
    double cap = intermediate_window_cap(g);
    require(req.t_samples.back() <= cap,
            "window end " + std::to_string(req.t_samples.back()) +
                " exceeds box cap " + std::to_string(cap));
    require(is_localized(init.field, 1e-3), "initial data is not localized in the middle half box");

    std::vector<NormSeries> out;
    for (auto& [p, q] : req.pq) {
        NormSeries s;
        s.id = init.generator + "_" + propagator_name(req.kind) + "_" + component_name(req.selector);
        s.p = p;
        s.q = q;
        s.alpha = req.alpha;
        s.fit_time_offset = init.heat_age;
        out.push_back(std::move(s));
    }
    for (double t : req.t_samples) {
        VectorField ft = apply_semigroup(req.kind, init.field, t);
        if (req.alpha.order() > 0) ft = derivative(ft, req.alpha);
        std::size_t si = 0;
        for (auto& [p, q] : req.pq) {
            double n = 0.0;
            switch (req.selector) {
                case ComponentSelector::Vertical: n = aniso_norm(ft.comp(2), p, q); break;
                case ComponentSelector::Horizontal: {
                    // Euclidean magnitude of the two horizontal components
                    ScalarField mag(ft.grid_ptr());
                    auto& m = mag.mutable_real();
                    const auto& a = ft.comp(0).real();
                    const auto& b = ft.comp(1).real();
                    for (std::size_t i = 0; i < m.size(); ++i)
                        m[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
                    n = aniso_norm(mag, p, q);
                    break;
                }
                case ComponentSelector::Magnitude: n = aniso_norm(ft, p, q); break;
            }
            out[si++].push(t, n);
        }
    }
    return out;
}

} // namespace anismhd
