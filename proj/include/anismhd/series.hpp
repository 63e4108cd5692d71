#pragma once

#include <string>
#include <vector>

#include "anismhd/common.hpp"

namespace anismhd {

/// Time-stamped norm samples tagged with the measured quantity.
struct NormSeries {
    std::string id;
    Exponent p{2.0}, q{2.0};
    DerivativeIndex alpha;
    /// Heat age of the underlying data: rate fits regress against
    /// log(t + fit_time_offset). Zero when no offset applies.
    double fit_time_offset = 0.0;
    std::vector<double> t;
    std::vector<double> value;

    void push(double time, double v) {
        require(t.empty() || time > t.back(), "norm series times must strictly increase");
        require(v >= 0.0, "norm series values must be >= 0");
        t.push_back(time);
        value.push_back(v);
    }

    std::size_t size() const { return t.size(); }
};

} // namespace anismhd
