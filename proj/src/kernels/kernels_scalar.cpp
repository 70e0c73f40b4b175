#include "besov/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace besov::kernels {
namespace {

double s_sum_abs(const double* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
    return acc;
}

double s_sum_sq(const double* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double s_sum_sqrt_abs(const double* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::sqrt(std::fabs(x[i]));
    return acc;
}

double s_max_abs(const double* x, size_t n) {
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double s_min_val(const double* x, size_t n) {
    if (n == 0) return 0.0;
    double m = x[0];
    for (size_t i = 1; i < n; ++i) m = std::min(m, x[i]);
    return m;
}

double s_max_abs_diff(const double* x, const double* y, size_t n) {
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i] - y[i]));
    return m;
}

void s_mul(double* dst, const double* a, const double* b, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void s_axpy(double* dst, double alpha, const double* x, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] += alpha * x[i];
}

void s_max_abs_scaled(double* dst, double alpha, const double* x, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = std::max(dst[i], alpha * std::fabs(x[i]));
}

} // namespace

const Backend scalar_backend = {
    "scalar",        s_sum_abs, s_sum_sq, s_sum_sqrt_abs, s_max_abs,
    s_min_val,       s_max_abs_diff, s_mul, s_axpy, s_max_abs_scaled,
};

double sum_abs_pow(const double* x, size_t n, double p) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::pow(std::fabs(x[i]), p);
    return acc;
}

} // namespace besov::kernels
