#include "besov/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "besov/kernels.hpp"
#include "besov/steps.hpp"
#include "besov/threads.hpp"

namespace besov {
namespace {

double max_lattice_frequency(const Grid& g) {
    const int64_t half = g.n_axis() / 2;
    const double unit = 6.283185307179586476925286766559 / g.W;
    double axis = unit * double(half);
    return g.d == 1 ? axis : axis * std::sqrt(2.0);
}

} // namespace

double phi0_profile(double abs_xi) { return smooth_step(3.0 - 2.0 * abs_xi); }

int dyadic_K_max(const Grid& grid) {
    double max_xi = max_lattice_frequency(grid);
    int k = 0;
    while (std::ldexp(1.0, k) < max_xi) ++k;
    return k;
}

DyadicPartition build_partition(const Grid& grid) {
    DyadicPartition part;
    part.grid = grid;
    part.K_max = dyadic_K_max(grid);
    const int64_t size = grid.size();
    std::vector<double> abs_xi(static_cast<size_t>(size));
    for (int64_t i = 0; i < size; ++i) abs_xi[size_t(i)] = bin_frequency(grid, i);
    part.multipliers.assign(size_t(part.K_max) + 1, std::vector<double>(static_cast<size_t>(size)));
    for (int k = 0; k <= part.K_max; ++k) {
        const double inv = std::ldexp(1.0, -k);
        auto& m = part.multipliers[size_t(k)];
        if (k == 0) {
            for (int64_t i = 0; i < size; ++i) m[size_t(i)] = phi0_profile(abs_xi[size_t(i)]);
        } else {
            for (int64_t i = 0; i < size; ++i) {
                double x = abs_xi[size_t(i)];
                m[size_t(i)] = phi0_profile(inv * x) - phi0_profile(2.0 * inv * x);
            }
        }
    }
    return part;
}

BandDecomposition band_decompose(const SampledFunction& f, const DyadicPartition& partition) {
    require_same_grid(f.grid, partition.grid, "band_decompose");
    Spectrum spec = forward_spectrum(f);
    BandDecomposition out;
    out.grid = f.grid;
    out.bands.assign(partition.multipliers.size(), SampledFunction());
    parallel_for(partition.multipliers.size(), [&](size_t k) {
        Spectrum piece(f.grid);
        const auto& m = partition.multipliers[k];
        for (size_t i = 0; i < piece.bins.size(); ++i) piece.bins[i] = spec.bins[i] * m[i];
        out.bands[k] = inverse_spectrum_unchecked(piece);
    });
    return out;
}

NormBreakdown besov_norm_fourier(const SampledFunction& f, const SmoothnessParams& params) {
    params.validate_basic();
    DyadicPartition part = build_partition(f.grid);
    BandDecomposition bands = band_decompose(f, part);
    NormBreakdown bd;
    bd.characterization = Characterization::fourier;
    bd.grid = f.grid;
    bd.s = params.s;
    bd.p = params.p;
    bd.q = params.q;
    std::vector<double> vals;
    for (int k = 0; k <= part.K_max; ++k) {
        double weighted = std::pow(2.0, params.s * k) * lp_norm(bands.bands[size_t(k)], params.p);
        bd.terms.push_back({k, 0, weighted});
        vals.push_back(weighted);
    }
    bd.total = lq_aggregate(vals, params.q);
    bd.notes.push_back("bands k > " + std::to_string(part.K_max) +
                       " vanish identically on this grid");
    return bd;
}

SampledFunction peetre_maximal(const SampledFunction& f, const PeetreParams& params) {
    params.validate();
    const int64_t n = f.grid.n_axis();
    const double dx = f.grid.dx();
    SampledFunction out(f.grid);
    const double* x = f.v.data();
    double* P = out.v.data();
    const size_t total = f.v.size();
    for (size_t i = 0; i < total; ++i) P[i] = std::fabs(x[i]);
    const double max_f = kernels::max_abs(x, total);
    if (max_f == 0.0) return out;

    auto weight = [&](double dist_units) {
        return 1.0 / (1.0 + std::pow(params.b * dist_units, params.a));
    };

    if (f.grid.d == 1) {
        for (int64_t j = 1; j <= n / 2; ++j) {
            double w = weight(double(j) * dx);
            // offset -j and +j share the weight
            kernels::max_abs_scaled(P + j, w, x, size_t(n - j));
            kernels::max_abs_scaled(P, w, x + (n - j), size_t(j));
            kernels::max_abs_scaled(P, w, x + j, size_t(n - j));
            kernels::max_abs_scaled(P + (n - j), w, x, size_t(j));
            if ((j & 15) == 0 && w * max_f <= kernels::min_val(P, total)) break;
        }
    } else {
        struct Off {
            int64_t z0, z1;
            double dist;
        };
        std::vector<Off> offs;
        offs.reserve(size_t(n) * size_t(n));
        for (int64_t z0 = -n / 2; z0 < n / 2; ++z0)
            for (int64_t z1 = -n / 2; z1 < n / 2; ++z1) {
                if (z0 == 0 && z1 == 0) continue;
                offs.push_back({z0, z1, std::hypot(double(z0), double(z1)) * dx});
            }
        std::sort(offs.begin(), offs.end(), [](const Off& a, const Off& b) {
            if (a.dist != b.dist) return a.dist < b.dist;
            if (a.z0 != b.z0) return a.z0 < b.z0;
            return a.z1 < b.z1;
        });
        size_t done = 0;
        for (const Off& o : offs) {
            double w = weight(o.dist);
            int64_t s0 = ((o.z0 % n) + n) % n, s1 = ((o.z1 % n) + n) % n;
            for (int64_t i = 0; i < n; ++i) {
                const double* src = x + ((i - s0 + n) % n) * n;
                double* dst = P + i * n;
                // dst[j] vs src[(j - s1) mod n]
                kernels::max_abs_scaled(dst + s1, w, src, size_t(n - s1));
                kernels::max_abs_scaled(dst, w, src + (n - s1), size_t(s1));
            }
            if ((++done & 63) == 0 && w * max_f <= kernels::min_val(P, total)) break;
        }
    }
    return out;
}

} // namespace besov
