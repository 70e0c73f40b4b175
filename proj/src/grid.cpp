#include "besov/grid.hpp"

#include <cmath>
#include <sstream>

#include "besov/kernels.hpp"
#include "besov/params.hpp"

namespace besov {
namespace {

bool is_pow2(int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

int64_t wrap(int64_t i, int64_t n) {
    int64_t m = i % n;
    return m < 0 ? m + n : m;
}

// dst[0..n) += alpha * x[(. + off) mod n)
void axpy_rotated(double* dst, double alpha, const double* x, int64_t n, int64_t off) {
    off = wrap(off, n);
    kernels::axpy(dst, alpha, x + off, size_t(n - off));
    kernels::axpy(dst + (n - off), alpha, x, size_t(off));
}

} // namespace

void Grid::validate() const {
    if (d != 1 && d != 2)
        throw invalid_params_error("grid dimension must be 1 or 2 (got d=" + std::to_string(d) + ")");
    if (!is_pow2(W))
        throw invalid_params_error("grid cell count W must be a positive power of two (got W=" +
                                   std::to_string(W) + ")");
    if (r < 0 || r > 24)
        throw invalid_params_error("grid resolution r must be in [0, 24] (got r=" +
                                   std::to_string(r) + ")");
    int64_t n = n_axis();
    if (n > (int64_t(1) << 24))
        throw invalid_params_error("grid axis too large: W*2^r = " + std::to_string(n));
    if (d == 2 && n * n > (int64_t(1) << 26))
        throw invalid_params_error("grid too large: (W*2^r)^2 = " + std::to_string(n * n));
}

SampledFunction::SampledFunction(const Grid& g, std::vector<double> values)
    : grid(g), v(std::move(values)) {
    if (int64_t(v.size()) != g.size())
        throw invalid_params_error("sample count " + std::to_string(v.size()) +
                                   " does not match grid size " + std::to_string(g.size()));
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": grids differ ((d,W,r) = (" << a.d << "," << a.W << "," << a.r << ") vs ("
           << b.d << "," << b.W << "," << b.r << "))";
        throw grid_mismatch_error(os.str());
    }
}

void require_finite(const SampledFunction& f, const char* what) {
    for (size_t i = 0; i < f.v.size(); ++i) {
        if (!std::isfinite(f.v[i]))
            throw invalid_params_error(std::string(what) + ": non-finite sample at flat index " +
                                       std::to_string(i));
    }
}

double lp_norm(const SampledFunction& f, double p) {
    if (!(p > 0.0) || std::isnan(p))
        throw invalid_params_error("lp_norm requires p in (0, inf] (got p=" + std::to_string(p) + ")");
    const double* x = f.v.data();
    size_t n = f.v.size();
    double result;
    if (p == infinity) {
        result = kernels::max_abs(x, n);
    } else {
        double cell = f.grid.cell();
        double acc;
        if (p == 2.0)
            acc = kernels::sum_sq(x, n);
        else if (p == 1.0)
            acc = kernels::sum_abs(x, n);
        else if (p == 0.5)
            acc = kernels::sum_sqrt_abs(x, n);
        else
            acc = kernels::sum_abs_pow(x, n, p);
        result = std::pow(acc * cell, 1.0 / p);
    }
    if (!std::isfinite(result)) {
        require_finite(f, "lp_norm");
        throw invalid_params_error("lp_norm overflowed (finite input, p=" + std::to_string(p) + ")");
    }
    return result;
}

double lp_seq(const double* x, size_t n, double p) {
    if (!(p > 0.0) || std::isnan(p))
        throw invalid_params_error("lp_seq requires p in (0, inf] (got p=" + std::to_string(p) + ")");
    if (p == infinity) return kernels::max_abs(x, n);
    double acc = (p == 2.0)   ? kernels::sum_sq(x, n)
                 : (p == 1.0) ? kernels::sum_abs(x, n)
                 : (p == 0.5) ? kernels::sum_sqrt_abs(x, n)
                              : kernels::sum_abs_pow(x, n, p);
    return std::pow(acc, 1.0 / p);
}

SampledFunction product(const SampledFunction& f, const SampledFunction& g) {
    require_same_grid(f.grid, g.grid, "product");
    SampledFunction out(f.grid);
    kernels::mul(out.v.data(), f.v.data(), g.v.data(), f.v.size());
    return out;
}

SampledFunction translate(const SampledFunction& f, const LatticeShift& h) {
    const int64_t n = f.grid.n_axis();
    SampledFunction out(f.grid);
    if (f.grid.d == 1) {
        int64_t off = wrap(h.h[0], n);
        for (int64_t i = 0; i < n; ++i) out.v[size_t(i)] = f.v[size_t((i + off) % n)];
    } else {
        int64_t o0 = wrap(h.h[0], n), o1 = wrap(h.h[1], n);
        for (int64_t i = 0; i < n; ++i) {
            const double* src = f.v.data() + ((i + o0) % n) * n;
            double* dst = out.v.data() + i * n;
            for (int64_t j = 0; j < n; ++j) dst[j] = src[(j + o1) % n];
        }
    }
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * double(n - i) / double(i + 1);
    return std::round(c);
}

SampledFunction difference(const SampledFunction& f, const LatticeShift& h, int m) {
    if (m < 1 || m > 16)
        throw invalid_params_error("difference order m must be in [1, 16] (got m=" +
                                   std::to_string(m) + ")");
    const int64_t n = f.grid.n_axis();
    for (int axis = 0; axis < f.grid.d; ++axis) {
        if (h.h[size_t(axis)] <= -n || h.h[size_t(axis)] >= n)
            throw invalid_params_error("shift component out of range (-N, N)");
    }
    if (h.is_zero()) throw invalid_params_error("difference step must be nonzero");

    SampledFunction out(f.grid);
    if (f.grid.d == 1) {
        for (int l = 0; l <= m; ++l) {
            double w = ((m - l) % 2 ? -1.0 : 1.0) * binomial(m, l);
            axpy_rotated(out.v.data(), w, f.v.data(), n, l * h.h[0]);
        }
    } else {
        for (int l = 0; l <= m; ++l) {
            double w = ((m - l) % 2 ? -1.0 : 1.0) * binomial(m, l);
            int64_t o0 = wrap(l * h.h[0], n), o1 = wrap(l * h.h[1], n);
            for (int64_t i = 0; i < n; ++i) {
                double* dst = out.v.data() + i * n;
                const double* src = f.v.data() + ((i + o0) % n) * n;
                axpy_rotated(dst, w, src, n, o1);
            }
        }
    }
    return out;
}

SampledFunction axpy(const SampledFunction& f, double alpha, const SampledFunction& g) {
    require_same_grid(f.grid, g.grid, "axpy");
    SampledFunction out = f;
    kernels::axpy(out.v.data(), alpha, g.v.data(), g.v.size());
    return out;
}

SampledFunction scaled(const SampledFunction& f, double alpha) {
    SampledFunction out = f;
    for (double& x : out.v) x *= alpha;
    return out;
}

} // namespace besov
