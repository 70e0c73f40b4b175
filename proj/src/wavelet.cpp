#include "besov/wavelet.hpp"

#include <bit>
#include <cmath>

#include "besov/errors.hpp"

namespace besov {
namespace {

// Orthonormal 16-tap lowpass filter with 8 vanishing moments, computed by
// spectral factorization at 60-digit precision and frozen here. Invariants
// (checked in tests): sum = sqrt(2), sum of squares = 1, even-shift
// orthogonality, highpass moments 0..7 all vanish.
constexpr std::array<double, WaveletSystem::taps> kLowpass = {
    -0.00011747678412476953373, 0.00067544940645056936637,  -0.00039174037337694704630,
    -0.0048703529934515743104,  0.0087460940474057767164,   0.013981027917398281649,
    -0.044088253930794751507,   -0.017369301001807546170,   0.12874742662047845886,
    0.00047248457391328277036,  -0.28401554296154692652,    -0.015829105256349305667,
    0.58535468365420671277,     0.67563073629728980681,     0.31287159091429997066,
    0.054415842243104009955,
};

std::array<double, WaveletSystem::taps> make_highpass() {
    std::array<double, WaveletSystem::taps> g{};
    for (int t = 0; t < WaveletSystem::taps; ++t) {
        double h = kLowpass[size_t(WaveletSystem::taps - 1 - t)];
        g[size_t(t)] = (t % 2 == 0) ? h : -h;
    }
    return g;
}

const std::array<double, WaveletSystem::taps> kHighpass = make_highpass();

int log2_int(int64_t x) { return std::countr_zero(uint64_t(x)); }

// One periodized analysis stage: n samples -> n/2 approx + n/2 detail,
// approx[i] = sum_t h[t] x[(2i+t) mod n], detail likewise with g.
void stage_1d(const double* x, int64_t n, double* approx, double* detail) {
    const int64_t half = n / 2;
    for (int64_t i = 0; i < half; ++i) {
        double a = 0.0, d = 0.0;
        int64_t base = 2 * i;
        for (int t = 0; t < WaveletSystem::taps; ++t) {
            int64_t idx = base + t;
            if (idx >= n) idx -= n; // taps <= 16 <= n, one wrap suffices
            a += kLowpass[size_t(t)] * x[idx];
            d += kHighpass[size_t(t)] * x[idx];
        }
        approx[i] = a;
        detail[i] = d;
    }
}

// Adjoint of stage_1d (orthogonal, so also its inverse).
void unstage_1d(const double* approx, const double* detail, int64_t n, double* x) {
    const int64_t half = n / 2;
    for (int64_t i = 0; i < n; ++i) x[i] = 0.0;
    for (int64_t i = 0; i < half; ++i) {
        int64_t base = 2 * i;
        for (int t = 0; t < WaveletSystem::taps; ++t) {
            int64_t idx = base + t;
            if (idx >= n) idx -= n;
            x[idx] += kLowpass[size_t(t)] * approx[i] + kHighpass[size_t(t)] * detail[i];
        }
    }
}

} // namespace

const std::array<double, WaveletSystem::taps>& WaveletSystem::lowpass() { return kLowpass; }
const std::array<double, WaveletSystem::taps>& WaveletSystem::highpass() { return kHighpass; }

int wavelet_j_min(const Grid& grid) { return 3 - log2_int(grid.W); }

std::vector<int> WaveletCoeffs::levels() const {
    std::vector<int> out;
    for (int j = j_min; j <= j_max; ++j) out.push_back(j);
    return out;
}

WaveletCoeffs analyze(const SampledFunction& f) {
    const Grid& g = f.grid;
    const int64_t n0 = g.n_axis();
    if (n0 < 16)
        throw invalid_params_error("wavelet analysis needs at least 16 samples per axis (got " +
                                   std::to_string(n0) + ")");
    WaveletCoeffs c;
    c.grid = g;
    c.j_min = wavelet_j_min(g);
    c.j_max = g.r - 1;
    const int stages = c.j_max - c.j_min + 1;
    c.details.assign(size_t(stages), std::vector<std::vector<double>>(size_t(c.orientations())));

    const double quad = std::pow(g.dx(), 0.5 * g.d);
    if (g.d == 1) {
        std::vector<double> cur(f.v.size());
        for (size_t i = 0; i < cur.size(); ++i) cur[i] = f.v[i] * quad;
        int64_t n = n0;
        for (int j = c.j_max; j >= c.j_min; --j) {
            std::vector<double> approx(size_t(n / 2)), detail(size_t(n / 2));
            stage_1d(cur.data(), n, approx.data(), detail.data());
            c.details[size_t(j - c.j_min)][0] = std::move(detail);
            cur = std::move(approx);
            n /= 2;
        }
        c.scaling = std::move(cur);
    } else {
        std::vector<double> cur(f.v.size());
        for (size_t i = 0; i < cur.size(); ++i) cur[i] = f.v[i] * quad;
        int64_t n = n0;
        for (int j = c.j_max; j >= c.j_min; --j) {
            const int64_t h = n / 2;
            // rows: split into low/high halves along axis 1
            std::vector<double> rl(size_t(n * h)), rh(size_t(n * h));
            for (int64_t i = 0; i < n; ++i)
                stage_1d(cur.data() + i * n, n, rl.data() + i * h, rh.data() + i * h);
            // columns of each half along axis 0
            std::vector<double> ll(size_t(h * h)), o1(size_t(h * h)), o2(size_t(h * h)),
                o3(size_t(h * h));
            std::vector<double> col(static_cast<size_t>(n)), ca(static_cast<size_t>(h)), cd(static_cast<size_t>(h));
            for (int64_t jcol = 0; jcol < h; ++jcol) {
                for (int64_t i = 0; i < n; ++i) col[size_t(i)] = rl[size_t(i * h + jcol)];
                stage_1d(col.data(), n, ca.data(), cd.data());
                for (int64_t i = 0; i < h; ++i) {
                    ll[size_t(i * h + jcol)] = ca[size_t(i)];
                    o2[size_t(i * h + jcol)] = cd[size_t(i)];
                }
                for (int64_t i = 0; i < n; ++i) col[size_t(i)] = rh[size_t(i * h + jcol)];
                stage_1d(col.data(), n, ca.data(), cd.data());
                for (int64_t i = 0; i < h; ++i) {
                    o1[size_t(i * h + jcol)] = ca[size_t(i)];
                    o3[size_t(i * h + jcol)] = cd[size_t(i)];
                }
            }
            auto& slot = c.details[size_t(j - c.j_min)];
            slot[0] = std::move(o1);
            slot[1] = std::move(o2);
            slot[2] = std::move(o3);
            cur = std::move(ll);
            n = h;
        }
        c.scaling = std::move(cur);
    }
    return c;
}

SampledFunction synthesize(const WaveletCoeffs& c) {
    const Grid& g = c.grid;
    SampledFunction out(g);
    const double quad = std::pow(g.dx(), 0.5 * g.d);
    if (g.d == 1) {
        std::vector<double> cur = c.scaling;
        for (int j = c.j_min; j <= c.j_max; ++j) {
            const auto& detail = c.details[size_t(j - c.j_min)][0];
            int64_t n = int64_t(cur.size()) * 2;
            std::vector<double> next(static_cast<size_t>(n));
            unstage_1d(cur.data(), detail.data(), n, next.data());
            cur = std::move(next);
        }
        for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = cur[i] / quad;
    } else {
        std::vector<double> cur = c.scaling;
        int64_t h = int64_t(std::llround(std::sqrt(double(cur.size()))));
        for (int j = c.j_min; j <= c.j_max; ++j) {
            const auto& slot = c.details[size_t(j - c.j_min)];
            const int64_t n = h * 2;
            std::vector<double> rl(size_t(n * h)), rh(size_t(n * h));
            std::vector<double> ca(static_cast<size_t>(h)), cd(static_cast<size_t>(h)), col(static_cast<size_t>(n));
            for (int64_t jcol = 0; jcol < h; ++jcol) {
                for (int64_t i = 0; i < h; ++i) {
                    ca[size_t(i)] = cur[size_t(i * h + jcol)];
                    cd[size_t(i)] = slot[1][size_t(i * h + jcol)];
                }
                unstage_1d(ca.data(), cd.data(), n, col.data());
                for (int64_t i = 0; i < n; ++i) rl[size_t(i * h + jcol)] = col[size_t(i)];
                for (int64_t i = 0; i < h; ++i) {
                    ca[size_t(i)] = slot[0][size_t(i * h + jcol)];
                    cd[size_t(i)] = slot[2][size_t(i * h + jcol)];
                }
                unstage_1d(ca.data(), cd.data(), n, col.data());
                for (int64_t i = 0; i < n; ++i) rh[size_t(i * h + jcol)] = col[size_t(i)];
            }
            std::vector<double> next(size_t(n * n));
            for (int64_t i = 0; i < n; ++i)
                unstage_1d(rl.data() + i * h, rh.data() + i * h, n, next.data() + i * n);
            cur = std::move(next);
            h = n;
        }
        for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = cur[i] / quad;
    }
    return out;
}

NormBreakdown besov_norm_wavelet(const WaveletCoeffs& c, const SmoothnessParams& params) {
    params.validate_wavelet();
    NormBreakdown bd;
    bd.characterization = Characterization::wavelet;
    bd.grid = c.grid;
    bd.s = params.s;
    bd.p = params.p;
    bd.q = params.q;
    bd.side_term = lp_seq(c.scaling.data(), c.scaling.size(), params.p);
    bd.has_side_term = true;
    const int d = c.grid.d;
    std::vector<double> vals;
    for (int j = c.j_min; j <= c.j_max; ++j) {
        for (int o = 1; o <= c.orientations(); ++o) {
            const auto& block = c.details[size_t(j - c.j_min)][size_t(o - 1)];
            double inner = lp_seq(block.data(), block.size(), params.p);
            if (params.p != infinity) inner *= std::pow(2.0, -double(j) * d / params.p);
            double weighted = std::pow(2.0, double(j) * (params.s + 0.5 * d)) * inner;
            bd.terms.push_back({j, o, weighted});
            vals.push_back(weighted);
        }
    }
    bd.total = bd.side_term + lq_aggregate(vals, params.q);
    return bd;
}

NormBreakdown besov_norm_wavelet(const SampledFunction& f, const SmoothnessParams& params) {
    return besov_norm_wavelet(analyze(f), params);
}

} // namespace besov
