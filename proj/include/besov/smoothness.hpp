#pragma once

#include <vector>

#include "besov/breakdown.hpp"
#include "besov/grid.hpp"
#include "besov/params.hpp"

namespace besov {

// Lattice shifts probing scale t (unit lengths): directions {+e_0} for d = 1,
// {(1,0), (0,1), (1,1), (1,-1)} for d = 2 (the sign-flipped companions give
// identical difference norms); magnitudes t(1 - 2^-j), j = 1..3, snapped to
// the lattice, plus the largest admissible step below t. Empty when t <= dx.
std::vector<LatticeShift> modulus_shift_set(const Grid& grid, double t);

// Modulus of smoothness omega_m(f, t)_p: max of ||D_h^m f||_p over the shift
// set for scale t. Throws when no lattice shift resolves t (t <= dx).
double modulus_of_smoothness(const SampledFunction& f, int m, double t, double p);

// Difference-characterization Besov norm:
//   ||f||_p + l_q over k >= 0 of 2^{ks} omega_m(f, 2^-k)_p,
// scales t_k = 2^-k down to the lattice (k <= r-1; finer scales are excluded
// and recorded in the breakdown notes).
NormBreakdown besov_norm_difference(const SampledFunction& f, const SmoothnessParams& params);

// q-combined flavor used by the multiplier machinery:
//   ( ||f||_p^q + sum_k (2^{ks} omega_m(f, 2^-k)_p)^q )^(1/q).
// Same scale ladder and shift sets as besov_norm_difference.
double difference_norm_q_combined(const SampledFunction& f, const SmoothnessParams& params);

} // namespace besov
