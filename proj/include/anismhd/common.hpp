#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace anismhd {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

/// Thrown when an operation's stated precondition is violated.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a run has to stop (NaN blowup, CFL exhaustion, bad input files).
class runtime_abort : public std::runtime_error {
public:
    explicit runtime_abort(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw precondition_error(msg);
}

/// Lebesgue exponent in [1, inf]; infinity() encodes the max norm.
struct Exponent {
    double value = 2.0;

    static Exponent inf() { return {std::numeric_limits<double>::infinity()}; }
    bool is_inf() const { return std::isinf(value); }

    static Exponent parse(const std::string& s) {
        if (s == "inf" || s == "Inf" || s == "INF") return inf();
        double v = std::stod(s);
        require(v >= 1.0, "Lebesgue exponent must be >= 1, got " + s);
        return {v};
    }
    std::string str() const { return is_inf() ? "inf" : (value == (int)value ? std::to_string((int)value) : std::to_string(value)); }
    /// 1/p, with 1/inf = 0.
    double inv() const { return is_inf() ? 0.0 : 1.0 / value; }
};

/// Spatial multi-index (a1, a2, a3); horizontal part is (a1, a2).
struct DerivativeIndex {
    int a1 = 0, a2 = 0, a3 = 0;

    int order() const { return a1 + a2 + a3; }
    int horizontal_order() const { return a1 + a2; }
    std::string str() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + ")";
    }
};

} // namespace anismhd
