#include "besov/localization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "besov/dyadic.hpp"
#include "besov/kernels.hpp"
#include "besov/rng.hpp"
#include "besov/steps.hpp"
#include "besov/threads.hpp"
#include "besov/wavelet.hpp"

namespace besov {
namespace {

double min_image_units(double x, double period) {
    double z = x - period * std::round(x / period);
    return z;
}

std::array<int64_t, 2> decode_mu(int64_t mu, int d, int W) {
    if (d == 1) return {mu, 0};
    return {mu / W, mu % W};
}

double norm_by_char(const SampledFunction& f, const SmoothnessParams& params,
                    Characterization ch) {
    switch (ch) {
        case Characterization::fourier: return besov_norm_fourier(f, params).total;
        case Characterization::wavelet: return besov_norm_wavelet(f, params).total;
        case Characterization::difference: break;
    }
    return besov_norm_difference(f, params).total;
}

} // namespace

SampledFunction PartitionOfUnity::apply(int64_t mu, const SampledFunction& f) const {
    require_same_grid(grid, f.grid, "partition apply");
    auto idx = decode_mu(mu, grid.d, grid.W);
    LatticeShift back(-idx[0] * stride, grid.d == 2 ? -idx[1] * stride : 0);
    return product(translate(psi, back), f);
}

PartitionOfUnity build_pou(const Grid& grid) {
    if (grid.r < 3)
        throw invalid_params_error("partition of unity requires r >= 3 (got r=" +
                                   std::to_string(grid.r) + ")");
    if (grid.W < 2)
        throw invalid_params_error("partition of unity requires W >= 2 (got W=" +
                                   std::to_string(grid.W) + ")");
    PartitionOfUnity pou;
    pou.grid = grid;
    pou.stride = int64_t(1) << grid.r;
    pou.psi = SampledFunction(grid);
    const int64_t n = grid.n_axis();
    const double dx = grid.dx();
    std::vector<double> axis(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        double z = min_image_units(i * dx, double(grid.W));
        axis[size_t(i)] = smooth_step(1.0 - std::fabs(z));
    }
    if (grid.d == 1) {
        pou.psi.v = axis;
    } else {
        for (int64_t i = 0; i < n; ++i)
            for (int64_t j = 0; j < n; ++j)
                pou.psi.v[size_t(i * n + j)] = axis[size_t(i)] * axis[size_t(j)];
    }
    return pou;
}

CoeffSeq CoeffSeq::zeros(const Grid& grid) {
    CoeffSeq c;
    c.d = grid.d;
    c.W = grid.W;
    c.c.assign(size_t(std::llround(grid.volume())), 0.0);
    return c;
}

CoeffSeq CoeffSeq::coordinate(const Grid& grid, int64_t mu) {
    CoeffSeq c = zeros(grid);
    c.c.at(static_cast<size_t>(mu)) = 1.0;
    return c;
}

double CoeffSeq::lp(double p) const { return lp_seq(c.data(), c.size(), p); }

void CoeffSeq::normalize_lp(double p) {
    double n = lp(p);
    if (n <= 0.0) throw invalid_params_error("cannot normalize the zero coefficient sequence");
    for (double& x : c) x /= n;
}

std::string CoeffSeq::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t mu = 0; mu < c.size(); ++mu) {
        if (c[mu] == 0.0) continue;
        nlohmann::json e;
        auto idx = decode_mu(int64_t(mu), d, W);
        e["mu"] = d == 1 ? nlohmann::json::array({idx[0]}) : nlohmann::json::array({idx[0], idx[1]});
        e["c"] = c[mu];
        arr.push_back(e);
    }
    return arr.dump();
}

LocalizedNorm besov_norm_localized(const SampledFunction& f, const LocalizationParams& params,
                                   Characterization ch) {
    params.validate(f.grid.d);
    PartitionOfUnity pou = build_pou(f.grid);
    const int64_t count = pou.translate_count();
    LocalizedNorm out;
    out.per_translate.assign(size_t(count), 0.0);
    parallel_for(size_t(count), [&](size_t mu) {
        SampledFunction masked = pou.apply(int64_t(mu), f);
        if (kernels::max_abs(masked.v.data(), masked.v.size()) == 0.0) return;
        out.per_translate[mu] = norm_by_char(masked, params.base, ch);
    });
    out.total = lq_aggregate(out.per_translate, params.v);
    return out;
}

double besov_norm_unif(const SampledFunction& f, const SmoothnessParams& params,
                       Characterization ch) {
    LocalizationParams lp;
    lp.base = params;
    lp.v = infinity;
    return besov_norm_localized(f, lp, ch).total;
}

MObjective::MObjective(const SampledFunction& f, const SmoothnessParams& params)
    : f_(f), params_(params), pou_(build_pou(f.grid)) {
    params_.validate_difference(f.grid.d);
    const int m = params_.order();
    const int64_t count = pou_.translate_count();
    masked_.resize(static_cast<size_t>(count));
    lp_masked_.assign(size_t(count), 0.0);
    parallel_for(size_t(count), [&](size_t mu) {
        masked_[mu] = pou_.apply(int64_t(mu), f_);
        lp_masked_[mu] = lp_norm(masked_[mu], params_.p);
    });
    for (int k = 0; k < f.grid.r; ++k) scale_k_.push_back(k);
    diff_table_.resize(scale_k_.size());
    for (size_t ki = 0; ki < scale_k_.size(); ++ki) {
        const double t = std::ldexp(1.0, -scale_k_[ki]);
        auto shifts = modulus_shift_set(f.grid, t);
        diff_table_[ki].assign(shifts.size(), std::vector<double>(size_t(count), 0.0));
        for (size_t hi = 0; hi < shifts.size(); ++hi) {
            auto& row = diff_table_[ki][hi];
            parallel_for(size_t(count), [&](size_t mu) {
                if (kernels::max_abs(masked_[mu].v.data(), masked_[mu].v.size()) == 0.0) return;
                double nrm = lp_norm(difference(masked_[mu], shifts[hi], m), params_.p);
                row[mu] = params_.p == infinity ? nrm : std::pow(nrm, params_.p);
            });
        }
    }
}

double MObjective::evaluate(const CoeffSeq& C) const {
    const int64_t count = pou_.translate_count();
    if (int64_t(C.c.size()) != count)
        throw invalid_params_error("coefficient sequence length does not match translate lattice");
    const double p = params_.p, q = params_.q, s = params_.s;

    // L_p part: || f * sum_mu C_mu psi_mu ||_p
    SampledFunction combo(f_.grid);
    for (int64_t mu = 0; mu < count; ++mu) {
        if (C.c[size_t(mu)] == 0.0) continue;
        kernels::axpy(combo.v.data(), C.c[size_t(mu)], masked_[size_t(mu)].v.data(),
                      combo.v.size());
    }
    const double lp_part = lp_norm(combo, p);

    std::vector<double> band(scale_k_.size(), 0.0);
    for (size_t ki = 0; ki < scale_k_.size(); ++ki) {
        double best = 0.0;
        for (const auto& row : diff_table_[ki]) {
            double acc = 0.0;
            if (p == infinity) {
                for (int64_t mu = 0; mu < count; ++mu)
                    acc = std::max(acc, std::fabs(C.c[size_t(mu)]) * row[size_t(mu)]);
            } else {
                for (int64_t mu = 0; mu < count; ++mu) {
                    if (C.c[size_t(mu)] == 0.0) continue;
                    acc += std::pow(std::fabs(C.c[size_t(mu)]), p) * row[size_t(mu)];
                }
            }
            best = std::max(best, acc);
        }
        double t_k = p == infinity ? best : std::pow(best, 1.0 / p);
        band[ki] = std::pow(2.0, s * scale_k_[ki]) * t_k;
    }

    if (q == infinity) {
        double m = lp_part;
        for (double b : band) m = std::max(m, b);
        return m;
    }
    double acc = std::pow(lp_part, q);
    for (double b : band) acc += std::pow(b, q);
    return std::pow(acc, 1.0 / q);
}

double m_objective(const SampledFunction& f, const SmoothnessParams& params, const CoeffSeq& C) {
    return MObjective(f, params).evaluate(C);
}

SampledFunction cover_bump(const Grid& grid, int64_t mu) {
    if (grid.W < 4)
        throw invalid_params_error("cover bump requires W >= 4 (got W=" + std::to_string(grid.W) +
                                   ")");
    auto idx = decode_mu(mu, grid.d, grid.W);
    return sample_plateau_bump(grid, {double(idx[0]), double(idx[1])}, 1.0, 2.0);
}

CoeffSeq cover_witness(const SampledFunction& g, const SmoothnessParams& params) {
    params.validate_basic();
    CoeffSeq c = CoeffSeq::zeros(g.grid);
    for (size_t mu = 0; mu < c.c.size(); ++mu) {
        SampledFunction masked = product(cover_bump(g.grid, int64_t(mu)), g);
        c.c[mu] = kernels::max_abs(masked.v.data(), masked.v.size());
    }
    double n = c.lp(params.p);
    if (n <= 0.0)
        throw invalid_params_error("witness recipe needs a nonzero g");
    for (double& x : c.c) x /= n;
    return c;
}

namespace {

struct Candidate {
    CoeffSeq seq;
    std::string kind;
};

std::vector<Candidate> build_candidates(const Grid& grid, double p, const SampledFunction& f,
                                        const SmoothnessParams& params, const MNormBudget& budget) {
    std::vector<Candidate> out;
    const int64_t count = int64_t(std::llround(grid.volume()));
    for (int64_t mu = 0; mu < count; ++mu)
        out.push_back({CoeffSeq::coordinate(grid, mu), "coordinate"});

    Rng rng(budget.seed);
    for (int i = 0; i < budget.n_random; ++i) {
        CoeffSeq c = CoeffSeq::zeros(grid);
        double density = rng.uniform(0.05, 1.0);
        bool any = false;
        for (auto& x : c.c) {
            if (rng.uniform() < density) {
                x = rng.sign() * (0.25 + std::fabs(rng.normal()));
                any = true;
            }
        }
        if (!any) c.c[rng.below(uint64_t(count))] = 1.0;
        c.normalize_lp(p);
        out.push_back({std::move(c), "random"});
    }

    // block-constant windows (axis-aligned, flat value), power-of-two widths
    const int W = grid.W;
    for (int L = 2; L <= W; L *= 2) {
        int step = std::max(1, L / 2);
        for (int start = 0; start < W; start += step) {
            CoeffSeq c = CoeffSeq::zeros(grid);
            if (grid.d == 1) {
                for (int o = 0; o < L; ++o) c.c[size_t((start + o) % W)] = 1.0;
            } else {
                for (int o0 = 0; o0 < L; ++o0)
                    for (int o1 = 0; o1 < L; ++o1)
                        c.c[size_t(((start + o0) % W) * W + (start + o1) % W)] = 1.0;
            }
            c.normalize_lp(p);
            out.push_back({std::move(c), "block"});
        }
    }

    out.push_back({cover_witness(f, params), "witness-recipe"});
    return out;
}

} // namespace

MNormResult m_norm_sup(const SampledFunction& f, const SmoothnessParams& params,
                       const MNormBudget& budget) {
    MObjective obj(f, params);
    const double p = params.p;
    auto candidates = build_candidates(f.grid, p, f, params, budget);

    std::vector<double> values(candidates.size(), 0.0);
    parallel_for(candidates.size(), [&](size_t i) { values[i] = obj.evaluate(candidates[i].seq); });

    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) best = i;

    MNormResult res;
    res.witness = candidates[best].seq;
    res.value = values[best];
    res.witness_kind = candidates[best].kind;
    res.candidates_evaluated = int(candidates.size());
    const double raw_best = res.value;

    double eta = 0.5;
    for (int sweep = 0; sweep < budget.ascent_sweeps; ++sweep, eta *= 0.5) {
        for (size_t mu = 0; mu < res.witness.c.size(); ++mu) {
            for (double dir : {1.0, -1.0}) {
                CoeffSeq trial = res.witness;
                trial.c[mu] += dir * eta;
                double n = trial.lp(p);
                if (n <= 0.0) continue;
                for (double& x : trial.c) x /= n;
                double val = obj.evaluate(trial);
                if (val > res.value * (1.0 + 1e-12)) {
                    res.value = val;
                    res.witness = std::move(trial);
                    res.ascent_steps_accepted++;
                }
            }
        }
    }
    res.ascent_gain = raw_best > 0.0 ? res.value / raw_best - 1.0 : 0.0;
    if (res.ascent_steps_accepted > 0) res.witness_kind = "ascent:" + res.witness_kind;

    bool pos = false, neg = false;
    for (double x : res.witness.c) {
        if (x > 0.0) pos = true;
        if (x < 0.0) neg = true;
    }
    res.witness_sign_constant = !(pos && neg);
    return res;
}

} // namespace besov
