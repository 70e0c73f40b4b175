#pragma once

#include <array>
#include <cmath>

#include "besov/grid.hpp"

namespace besov {

// H(t) = exp(-1/t) for t > 0, else 0. Smooth on all of R.
inline double smooth_h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// C^infinity monotone step: 0 for t <= 0, 1 for t >= 1.
inline double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = smooth_h(t);
    double b = smooth_h(1.0 - t);
    return a / (a + b);
}

// Even C^infinity bump: 1 on [-delta, delta], 0 outside (-rho, rho).
inline double plateau_profile(double x, double delta, double rho) {
    return smooth_step((rho - std::fabs(x)) / (rho - delta));
}

// Tensor-product bump sampled periodically (min-image distance to center).
// center is in unit lengths per axis; requires 0 < delta < rho <= W/2.
SampledFunction sample_plateau_bump(const Grid& grid, const std::array<double, 2>& center,
                                    double delta, double rho, double height = 1.0);

SampledFunction constant_function(const Grid& grid, double value);

} // namespace besov
