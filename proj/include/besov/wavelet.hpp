#pragma once

#include <array>
#include <vector>

#include "besov/breakdown.hpp"
#include "besov/grid.hpp"
#include "besov/params.hpp"

namespace besov {

// Orthonormal compactly supported filter pair with 8 vanishing moments
// (16 taps); smoothness certificate wavelet_s_max = 2.5.
struct WaveletSystem {
    static constexpr int taps = 16;
    static const std::array<double, taps>& lowpass();  // h, sum = sqrt(2)
    static const std::array<double, taps>& highpass(); // g_n = (-1)^n h_{taps-1-n}
};

// Periodized multiresolution coefficients. Detail levels are labeled by scale:
// level j holds W * 2^j coefficients per axis (j < 0 = coarser than one unit
// cell). Labels run j_min .. j_max = r - 1 with j_min = 3 - log2(W), so the
// coarsest retained scaling level keeps 8 coefficients per axis (or W when
// W < 8). Orientation 0 is reserved for the scaling block; detail orientations
// are 1 (d = 1) or 1..3 (d = 2, column/row/diagonal highpass).
struct WaveletCoeffs {
    Grid grid;
    int j_min = 0;
    int j_max = 0;
    std::vector<double> scaling;
    // details[j - j_min][orientation - 1] = flat coefficient block
    std::vector<std::vector<std::vector<double>>> details;

    int orientations() const { return (1 << grid.d) - 1; }
    // Coefficients per axis at detail level j (W * 2^j).
    int64_t axis_count(int j) const {
        return j >= 0 ? (int64_t(grid.W) << j) : (int64_t(grid.W) >> -j);
    }
    std::vector<int> levels() const;
};

int wavelet_j_min(const Grid& grid);

// Fine-scale coefficients are samples * dx^{d/2} (first-order quadrature of
// the inner products; the induced bias is part of the equivalence constants).
WaveletCoeffs analyze(const SampledFunction& f);
SampledFunction synthesize(const WaveletCoeffs& coeffs);

// Coefficient-space Besov norm:
//   (sum_k |scaling_k|^p)^(1/p)
//   + l_q over (orientation, j) of 2^{j(s + d/2)} (sum_k 2^{-jd} |a_{j,k}|^p)^(1/p).
NormBreakdown besov_norm_wavelet(const WaveletCoeffs& coeffs, const SmoothnessParams& params);
NormBreakdown besov_norm_wavelet(const SampledFunction& f, const SmoothnessParams& params);

} // namespace besov
