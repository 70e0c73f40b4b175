#include "besov/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "besov/errors.hpp"
#include "besov/kernels.hpp"

namespace besov {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// Shared twiddle tables keyed by transform size; values are deterministic, so
// caching is safe under any thread interleaving.
const std::vector<std::complex<double>>& twiddles(size_t n) {
    static std::mutex mu;
    static std::map<size_t, std::unique_ptr<std::vector<std::complex<double>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<std::complex<double>>>(n / 2);
        for (size_t j = 0; j < n / 2; ++j) {
            double a = -two_pi * double(j) / double(n);
            (*slot)[j] = {std::cos(a), std::sin(a)};
        }
    }
    return *slot;
}

void fft_1d(std::complex<double>* a, size_t n, bool inverse) {
    if (n <= 1) return;
    if (n & (n - 1)) throw invalid_params_error("fft size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& tw = twiddles(n);
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t stride = n / len;
        for (size_t base = 0; base < n; base += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                std::complex<double> w = tw[j * stride];
                if (inverse) w = std::conj(w);
                std::complex<double> u = a[base + j];
                std::complex<double> t = a[base + j + len / 2] * w;
                a[base + j] = u + t;
                a[base + j + len / 2] = u - t;
            }
        }
    }
}

} // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    fft_1d(a.data(), a.size(), inverse);
}

int64_t fold_bin(int64_t j, int64_t n) { return j <= n / 2 ? j : j - n; }

double bin_frequency(const Grid& g, int64_t i) {
    const int64_t n = g.n_axis();
    const double unit = two_pi / g.W;
    if (g.d == 1) return std::fabs(unit * double(fold_bin(i, n)));
    int64_t m0 = fold_bin(i / n, n);
    int64_t m1 = fold_bin(i % n, n);
    return unit * std::hypot(double(m0), double(m1));
}

Spectrum forward_spectrum(const SampledFunction& f) {
    const int64_t n = f.grid.n_axis();
    Spectrum s(f.grid);
    for (size_t i = 0; i < f.v.size(); ++i) s.bins[i] = f.v[i];
    if (f.grid.d == 1) {
        fft_1d(s.bins.data(), size_t(n), false);
    } else {
        for (int64_t i = 0; i < n; ++i) fft_1d(s.bins.data() + i * n, size_t(n), false);
        std::vector<std::complex<double>> col(static_cast<size_t>(n));
        for (int64_t j = 0; j < n; ++j) {
            for (int64_t i = 0; i < n; ++i) col[size_t(i)] = s.bins[size_t(i * n + j)];
            fft_1d(col.data(), size_t(n), false);
            for (int64_t i = 0; i < n; ++i) s.bins[size_t(i * n + j)] = col[size_t(i)];
        }
    }
    return s;
}

namespace {

SampledFunction inverse_impl(const Spectrum& s, double* max_re, double* max_im) {
    const int64_t n = s.grid.n_axis();
    std::vector<std::complex<double>> work = s.bins;
    if (s.grid.d == 1) {
        fft_1d(work.data(), size_t(n), true);
    } else {
        for (int64_t i = 0; i < n; ++i) fft_1d(work.data() + i * n, size_t(n), true);
        std::vector<std::complex<double>> col(static_cast<size_t>(n));
        for (int64_t j = 0; j < n; ++j) {
            for (int64_t i = 0; i < n; ++i) col[size_t(i)] = work[size_t(i * n + j)];
            fft_1d(col.data(), size_t(n), true);
            for (int64_t i = 0; i < n; ++i) work[size_t(i * n + j)] = col[size_t(i)];
        }
    }
    const double scale = 1.0 / double(s.grid.size());
    SampledFunction out(s.grid);
    *max_re = 0.0;
    *max_im = 0.0;
    for (size_t i = 0; i < work.size(); ++i) {
        double re = work[i].real() * scale;
        double im = work[i].imag() * scale;
        out.v[i] = re;
        *max_re = std::max(*max_re, std::fabs(re));
        *max_im = std::max(*max_im, std::fabs(im));
    }
    return out;
}

} // namespace

SampledFunction inverse_spectrum(const Spectrum& s) {
    double max_re = 0.0, max_im = 0.0;
    SampledFunction out = inverse_impl(s, &max_re, &max_im);
    if (max_im > 1e-9 * std::max(max_re, 1e-30))
        throw invalid_params_error(
            "inverse_spectrum: input is not Hermitian-symmetric (residual imaginary part " +
            std::to_string(max_im) + ")");
    return out;
}

SampledFunction inverse_spectrum_unchecked(const Spectrum& s) {
    double max_re = 0.0, max_im = 0.0;
    return inverse_impl(s, &max_re, &max_im);
}

} // namespace besov
