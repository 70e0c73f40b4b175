#pragma once

#include <complex>
#include <vector>

#include "besov/grid.hpp"

namespace besov {

// Discrete spectrum of a sampled function, same row-major layout as the
// samples. Bin m (per axis, folded to (-N/2, N/2]) carries frequency
// xi = (2 pi / W) * m, so the axis Nyquist frequency is pi * 2^r.
struct Spectrum {
    Grid grid;
    std::vector<std::complex<double>> bins;

    Spectrum() = default;
    explicit Spectrum(const Grid& g) : grid(g), bins(size_t(g.size())) {}
};

// Unnormalized forward DFT (radix-2, power-of-two sizes).
Spectrum forward_spectrum(const SampledFunction& f);

// Inverse DFT with 1/N^d normalization; returns the real part. The input must
// be (numerically) Hermitian-symmetric: a residual imaginary part above
// 1e-9 * max|f| is an error.
SampledFunction inverse_spectrum(const Spectrum& s);

// Same transform without the symmetry check. For internal paths that multiply
// a forward spectrum by a real, even mask: the product inherits the roundoff
// asymmetry of the big input spectrum, which the relative check misreads when
// the mask kills (almost) everything.
SampledFunction inverse_spectrum_unchecked(const Spectrum& s);

// Folded integer frequency for axis bin index j in [0, N).
int64_t fold_bin(int64_t j, int64_t n);

// Euclidean |xi| of flat bin index i.
double bin_frequency(const Grid& g, int64_t i);

// In-place complex FFT helpers (exposed for tests).
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

} // namespace besov
