#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "besov/errors.hpp"

namespace besov {

// Periodic sampling lattice on the torus (R/WZ)^d. One "unit" is one cell of
// the integer lattice; each axis carries N = W * 2^r equispaced samples with
// spacing dx = 2^-r units.
struct Grid {
    int d = 1;
    int W = 1;
    int r = 0;

    Grid() = default;
    Grid(int d_, int W_, int r_) : d(d_), W(W_), r(r_) { validate(); }

    void validate() const;

    int64_t n_axis() const { return int64_t(W) << r; }
    int64_t size() const {
        int64_t n = n_axis();
        return d == 1 ? n : n * n;
    }
    double dx() const { return std::ldexp(1.0, -r); }
    // d-dimensional cell volume of the sampling lattice.
    double cell() const { return std::pow(dx(), d); }
    double volume() const { return std::pow(double(W), d); }

    bool operator==(const Grid& o) const { return d == o.d && W == o.W && r == o.r; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

// Lattice step in sample units; components live in (-N, N).
struct LatticeShift {
    std::array<int64_t, 2> h{0, 0};

    LatticeShift() = default;
    explicit LatticeShift(int64_t h0) : h{h0, 0} {}
    LatticeShift(int64_t h0, int64_t h1) : h{h0, h1} {}

    bool is_zero() const { return h[0] == 0 && h[1] == 0; }
    // Euclidean length in sample units.
    double length() const { return std::hypot(double(h[0]), double(h[1])); }
};

// Real-valued function sampled on a Grid, row-major for d = 2.
struct SampledFunction {
    Grid grid;
    std::vector<double> v;

    SampledFunction() = default;
    explicit SampledFunction(const Grid& g) : grid(g), v(size_t(g.size()), 0.0) {}
    SampledFunction(const Grid& g, std::vector<double> values);

    double& at(int64_t i0) { return v[size_t(i0)]; }
    double& at(int64_t i0, int64_t i1) { return v[size_t(i0 * grid.n_axis() + i1)]; }
    double at(int64_t i0) const { return v[size_t(i0)]; }
    double at(int64_t i0, int64_t i1) const { return v[size_t(i0 * grid.n_axis() + i1)]; }
};

void require_same_grid(const Grid& a, const Grid& b, const char* what);

// Throws io-style errors if any sample is NaN or infinite.
void require_finite(const SampledFunction& f, const char* what);

// L_p quasi-norm with lattice quadrature: (sum |f|^p * dx^d)^(1/p); max |f| for
// p = infinity. Rejects p <= 0, NaN p, and non-finite samples.
double lp_norm(const SampledFunction& f, double p);

// Sequence l_p norm of raw coefficients (no quadrature weight).
double lp_seq(const double* x, size_t n, double p);

// Pointwise product on a shared grid.
SampledFunction product(const SampledFunction& f, const SampledFunction& g);

// f(. + h) with periodic wraparound (exact sample permutation).
SampledFunction translate(const SampledFunction& f, const LatticeShift& h);

// Forward difference of order m >= 1 with step h != 0:
//   (D_h^m f)(x) = sum_{l=0..m} (-1)^(m-l) C(m,l) f(x + l h).
SampledFunction difference(const SampledFunction& f, const LatticeShift& h, int m);

SampledFunction axpy(const SampledFunction& f, double alpha, const SampledFunction& g); // f + alpha*g
SampledFunction scaled(const SampledFunction& f, double alpha);

double binomial(int n, int k);

} // namespace besov
