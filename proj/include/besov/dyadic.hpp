#pragma once

#include <vector>

#include "besov/breakdown.hpp"
#include "besov/fft.hpp"
#include "besov/grid.hpp"
#include "besov/params.hpp"

namespace besov {

// Smooth dyadic partition of unity on the frequency lattice:
//   phi_0(xi) = step(3 - 2|xi|)   (1 on |xi| <= 1, 0 on |xi| >= 3/2),
//   phi_k(xi) = phi_0(2^-k xi) - phi_0(2^-k+1 xi), k >= 1.
// K_max is the smallest k with 2^k >= max lattice |xi|; beyond it every
// multiplier vanishes identically on the grid, so sum_{k<=K_max} phi_k = 1 at
// every lattice frequency.
struct DyadicPartition {
    Grid grid;
    int K_max = 0;
    // multipliers[k][bin] = phi_k at that bin's frequency
    std::vector<std::vector<double>> multipliers;
};

DyadicPartition build_partition(const Grid& grid);

double phi0_profile(double abs_xi);
int dyadic_K_max(const Grid& grid);

// Band pieces f_k = inverse DFT of phi_k * DFT(f); sum reproduces f exactly.
struct BandDecomposition {
    Grid grid;
    std::vector<SampledFunction> bands;
};

BandDecomposition band_decompose(const SampledFunction& f, const DyadicPartition& partition);

// Fourier-analytic Besov norm: l_q over k of 2^{ks} ||f_k||_p.
NormBreakdown besov_norm_fourier(const SampledFunction& f, const SmoothnessParams& params);

// Peetre maximal function on the lattice:
//   (P f)(x) = max_z |f(x - z)| / (1 + |b z|^a), z over all lattice offsets
// (periodic min-image distances). Exact maximum via a pruned sweep in
// increasing |z|.
SampledFunction peetre_maximal(const SampledFunction& f, const PeetreParams& params);

} // namespace besov
