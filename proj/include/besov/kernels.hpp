#pragma once

#include <cstddef>
#include <string>

namespace besov::kernels {

// Flat array primitives behind the norm and difference code paths. Each entry
// has a scalar reference implementation and may have an AVX2 variant; the
// active backend is chosen once at startup (cpuid + BESOV_SIMD override) and
// can be forced per-process for tests.
struct Backend {
    const char* name;
    double (*sum_abs)(const double*, size_t);
    double (*sum_sq)(const double*, size_t);
    double (*sum_sqrt_abs)(const double*, size_t);
    double (*max_abs)(const double*, size_t);
    double (*min_val)(const double*, size_t);
    double (*max_abs_diff)(const double*, const double*, size_t);
    void (*mul)(double*, const double*, const double*, size_t);
    void (*axpy)(double*, double, const double*, size_t);
    // dst[i] = max(dst[i], alpha * |x[i]|)
    void (*max_abs_scaled)(double*, double, const double*, size_t);
};

const Backend& active();
// name: "scalar", "avx2", or "auto". Throws if the backend is unavailable.
void force(const std::string& name);
bool cpu_has_avx2();

// sum |x_i|^p via std::pow; no SIMD variant (kept scalar on every backend).
double sum_abs_pow(const double* x, size_t n, double p);

inline double sum_abs(const double* x, size_t n) { return active().sum_abs(x, n); }
inline double sum_sq(const double* x, size_t n) { return active().sum_sq(x, n); }
inline double sum_sqrt_abs(const double* x, size_t n) { return active().sum_sqrt_abs(x, n); }
inline double max_abs(const double* x, size_t n) { return active().max_abs(x, n); }
inline double min_val(const double* x, size_t n) { return active().min_val(x, n); }
inline double max_abs_diff(const double* x, const double* y, size_t n) {
    return active().max_abs_diff(x, y, n);
}
inline void mul(double* dst, const double* a, const double* b, size_t n) {
    active().mul(dst, a, b, n);
}
inline void axpy(double* dst, double alpha, const double* x, size_t n) {
    active().axpy(dst, alpha, x, n);
}
inline void max_abs_scaled(double* dst, double alpha, const double* x, size_t n) {
    active().max_abs_scaled(dst, alpha, x, n);
}

extern const Backend scalar_backend;
#if defined(__x86_64__) || defined(_M_X64)
extern const Backend avx2_backend;
#endif

} // namespace besov::kernels
