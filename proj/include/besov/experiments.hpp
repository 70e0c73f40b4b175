#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "besov/grid.hpp"
#include "besov/params.hpp"

namespace besov::experiments {

inline constexpr uint64_t default_seed = 1729;

// Construction record for a generated extremal function.
struct ExtremalSpec {
    std::string kind;            // "bump_train" | "lacunary" | "multiplier_pair"
    int count = 0;               // bumps or active levels
    double spacing = 0.0;        // center spacing in unit lengths (bump kinds)
    int level_lo = 0;            // lacunary / multiplier_pair: dyadic levels
    int level_hi = 0;
    std::vector<double> heights; // bump heights / level amplitudes gamma_j
    std::string notes;
};

struct Extremal {
    SampledFunction f;
    ExtremalSpec spec;
};

struct MultiplierPairResult {
    SampledFunction f;
    SampledFunction g;
    ExtremalSpec spec;
};

// Train of disjoint smooth bumps at consecutive integer cells, heights C_l.
Extremal bump_train(const Grid& grid, const std::vector<double>& heights);

// sum_j alpha_j * (single wavelet at level j), one coefficient per active
// level j = level_lo .. level_lo + count - 1, centers spread across the torus;
// alpha_j = gamma_j * 2^{-j(s + d(1/2 - 1/p))} so level j contributes gamma_j
// to the coefficient norm.
Extremal lacunary_series(const Grid& grid, int level_lo, int count,
                         const std::vector<double>& gamma, double s, double p);

// f = lacunary series (gamma_j = 1) whose level-j terms sit on plateaus of
// g = sum of plateau bumps, so f * g = f exactly on the lattice.
MultiplierPairResult multiplier_pair(const Grid& grid, int level_lo, int count,
                                     double s, double p);

// max over the family of ||f g|| / ||g|| (difference characterization, same
// order both sides). Returns the max and the witness index.
std::pair<double, size_t> multiplier_norm_estimate(const SampledFunction& f,
                                                   const SmoothnessParams& params,
                                                   const std::vector<SampledFunction>& family);

// ||f g|| / (||f|| ||g||) with difference order 2m on the product norm.
double algebra_ratio(const SampledFunction& f, const SampledFunction& g,
                     const SmoothnessParams& params);

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0; // log2 value at log2 size = 0
    double r2 = 1.0;
    int n = 0;
};

// Least squares on (log2 size, log2 value). Requires >= 4 points and positive
// sizes/values.
ScalingFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& points);

// Frozen seeded family: 20 band-limited spectra, 20 sparse wavelet series,
// 10 bump trains. Identical across runs for a fixed seed.
std::vector<SampledFunction> standard_family(const Grid& grid, uint64_t seed);

struct ReportRow {
    std::string experiment;
    int d = 1, W = 0, r = 0;
    uint64_t seed = 0;
    double s = 0, p = 0, q = 0, v = 0;
    int m = 0;
    double size = 0; // family size variable (bump count, level count, index)
    std::string characterization;
    std::string quantity;
    double value = 0;
};

struct FitCheck {
    std::string name;
    double expected = 0, fitted = 0, tol = 0, r2 = 1;
    bool r2_required = false;
    bool pass = false;
};

struct RatioCheck {
    std::string name;
    double lo = 0, hi = 0;          // observed range
    double bound_lo = 0, bound_hi = 0; // admissible range
    bool pass = false;
};

struct Criterion {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<ReportRow> rows;
    std::vector<FitCheck> fits;
    std::vector<RatioCheck> ratios;
    std::vector<Criterion> criteria;
    bool pass = true;

    void finalize(); // pass = AND of criteria/fits/ratios
    // CSV: "# " header lines (suite, generation time, generator tag), then one
    // row per ReportRow. Identical across reruns except the timestamp line.
    void write_csv(const std::string& path) const;
    void write_json(const std::string& path) const;
};

std::vector<std::string> suite_names();

struct SuiteOptions {
    uint64_t seed = default_seed;
    std::string out_dir;     // empty = no files written
    int budget_random = 128; // m-norm search candidates
};

// Runs one named suite; throws invalid_params_error for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace besov::experiments
