#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "besov/kernels.hpp"

namespace besov::kernels {
namespace {

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_min_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double v_sum_abs(const double* x, size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i + 4)));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += std::fabs(x[i]);
    return acc;
}

double v_sum_sq(const double* x, size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d a = _mm256_loadu_pd(x + i);
        __m256d b = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double v_sum_sqrt_abs(const double* x, size_t n) {
    __m256d acc = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(a));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += std::sqrt(std::fabs(x[i]));
    return s;
}

double v_max_abs(const double* x, size_t n) {
    __m256d m = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        m = _mm256_max_pd(m, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i)));
    }
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::fabs(x[i]));
    return r;
}

double v_min_val(const double* x, size_t n) {
    if (n == 0) return 0.0;
    size_t i = 0;
    double r = x[0];
    if (n >= 4) {
        __m256d m = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) m = _mm256_min_pd(m, _mm256_loadu_pd(x + i));
        r = hmin(m);
    }
    for (; i < n; ++i) r = std::min(r, x[i]);
    return r;
}

double v_max_abs_diff(const double* x, const double* y, size_t n) {
    __m256d m = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        m = _mm256_max_pd(m, _mm256_and_pd(kAbsMask, d));
    }
    double r = hmax(m);
    for (; i < n; ++i) r = std::max(r, std::fabs(x[i] - y[i]));
    return r;
}

void v_mul(double* dst, const double* a, const double* b, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void v_axpy(double* dst, double alpha, const double* x, size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_loadu_pd(dst + i);
        _mm256_storeu_pd(dst + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), d));
    }
    for (; i < n; ++i) dst[i] += alpha * x[i];
}

void v_max_abs_scaled(double* dst, double alpha, const double* x, size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_mul_pd(va, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(dst + i, _mm256_max_pd(_mm256_loadu_pd(dst + i), a));
    }
    for (; i < n; ++i) dst[i] = std::max(dst[i], alpha * std::fabs(x[i]));
}

} // namespace

const Backend avx2_backend = {
    "avx2",          v_sum_abs, v_sum_sq, v_sum_sqrt_abs, v_max_abs,
    v_min_val,       v_max_abs_diff, v_mul, v_axpy, v_max_abs_scaled,
};

} // namespace besov::kernels

#endif
