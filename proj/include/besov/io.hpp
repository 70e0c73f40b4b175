#pragma once

#include <string>

#include "besov/grid.hpp"
#include "besov/wavelet.hpp"

namespace besov {

// Binary container for sampled functions:
//   magic "BSVF", u32 version = 1, u32 d, u32 W, u32 r,
//   then N^d float64 samples, row-major, little-endian.
void write_function(const std::string& path, const SampledFunction& f);
SampledFunction read_function(const std::string& path);

// Wavelet coefficients share the container layout with magic "BSVW":
//   magic, u32 version = 1, u32 d, u32 W, u32 r, i32 j_min, i32 j_max,
//   u32 block_count, then per block {i32 level, i32 orientation, u64 count}
//   (orientation 0 = scaling block), then the blocks' float64 payloads in
//   table order.
void write_coeffs(const std::string& path, const WaveletCoeffs& coeffs);
WaveletCoeffs read_coeffs(const std::string& path);

// Plain-text samples, one value per line (row-major), for interop/debugging.
void write_csv(const std::string& path, const SampledFunction& f);

} // namespace besov
