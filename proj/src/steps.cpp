#include "besov/steps.hpp"

#include "besov/errors.hpp"

namespace besov {
namespace {

// Signed min-image displacement from center, in unit lengths.
double min_image(double x, double center, double period) {
    double z = x - center;
    z -= period * std::round(z / period);
    return z;
}

} // namespace

SampledFunction sample_plateau_bump(const Grid& grid, const std::array<double, 2>& center,
                                    double delta, double rho, double height) {
    if (!(0.0 < delta && delta < rho && rho <= grid.W / 2.0))
        throw invalid_params_error("plateau bump requires 0 < delta < rho <= W/2");
    const int64_t n = grid.n_axis();
    const double dx = grid.dx();
    const double period = grid.W;
    SampledFunction out(grid);
    std::vector<double> axis0(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
        axis0[size_t(i)] = plateau_profile(min_image(i * dx, center[0], period), delta, rho);
    if (grid.d == 1) {
        for (int64_t i = 0; i < n; ++i) out.v[size_t(i)] = height * axis0[size_t(i)];
    } else {
        std::vector<double> axis1(static_cast<size_t>(n));
        for (int64_t j = 0; j < n; ++j)
            axis1[size_t(j)] = plateau_profile(min_image(j * dx, center[1], period), delta, rho);
        for (int64_t i = 0; i < n; ++i)
            for (int64_t j = 0; j < n; ++j)
                out.v[size_t(i * n + j)] = height * axis0[size_t(i)] * axis1[size_t(j)];
    }
    return out;
}

SampledFunction constant_function(const Grid& grid, double value) {
    SampledFunction out(grid);
    for (double& x : out.v) x = value;
    return out;
}

} // namespace besov
