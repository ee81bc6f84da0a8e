#pragma once

#include <cmath>

#include "pvh/result.hpp"

namespace pvh {

// Election weights for the capability score. Must sum to 1.
struct CapabilityWeights {
    double alpha = 0.5; // compute
    double beta = 0.3;  // memory
    double gamma = 0.2; // bandwidth

    bool valid() const {
        return std::abs(alpha + beta + gamma - 1.0) <= 1e-9 &&
               alpha >= 0.0 && beta >= 0.0 && gamma >= 0.0;
    }
};

// Weighted node capability score in [0,1]; the head-election metric.
inline Result<double> capability_value(double c, double m, double b,
                                       const CapabilityWeights& w) {
    if (!w.valid()) return Error::InvalidWeights;
    if (c < 0.0 || c > 1.0 || m < 0.0 || m > 1.0 || b < 0.0 || b > 1.0)
        return Error::InvalidWeights;
    return w.alpha * c + w.beta * m + w.gamma * b;
}

} // namespace pvh
