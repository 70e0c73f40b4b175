#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "besov/errors.hpp"
#include "besov/params.hpp"
#include "besov/experiments.hpp"
#include "besov/rng.hpp"
#include "besov/steps.hpp"
#include "besov/wavelet.hpp"

using namespace besov;

namespace {

SampledFunction noise(const Grid& g, uint64_t seed) {
    Rng rng(seed);
    SampledFunction f(g);
    for (double& x : f.v) x = rng.normal();
    return f;
}

double max_rel_err(const SampledFunction& a, const SampledFunction& b) {
    double scale = lp_norm(a, infinity);
    return lp_norm(axpy(a, -1.0, b), infinity) / scale;
}

} // namespace

TEST_CASE("filter pair is orthonormal with sqrt(2) mean") {
    const auto& h = WaveletSystem::lowpass();
    const auto& g = WaveletSystem::highpass();
    double sum = 0.0, sq = 0.0;
    for (double c : h) {
        sum += c;
        sq += c * c;
    }
    CHECK(sum == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sq == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 8; ++k) {
        double dot = 0.0;
        for (int t = 0; t + 2 * k < WaveletSystem::taps; ++t) dot += h[size_t(t)] * h[size_t(t + 2 * k)];
        CHECK(std::fabs(dot) <= 1e-12);
    }
    for (int t = 0; t < WaveletSystem::taps; ++t) {
        double want = (t % 2 == 0 ? 1.0 : -1.0) * h[size_t(WaveletSystem::taps - 1 - t)];
        CHECK(g[size_t(t)] == want);
    }
}

TEST_CASE("level labels and block sizes") {
    Grid g(1, 64, 6);
    WaveletCoeffs c = analyze(SampledFunction(g));
    CHECK(c.j_min == -3);
    CHECK(c.j_max == 5);
    CHECK(c.scaling.size() == 8); // coarsest scaling block keeps 8 per axis
    CHECK(c.axis_count(-3) == 8);
    CHECK(c.axis_count(0) == 64);
    CHECK(c.axis_count(5) == 2048);
    REQUIRE(c.details.size() == size_t(c.j_max - c.j_min + 1));
    for (int j = c.j_min; j <= c.j_max; ++j) {
        REQUIRE(c.details[size_t(j - c.j_min)].size() == 1);
        CHECK(c.details[size_t(j - c.j_min)][0].size() == size_t(c.axis_count(j)));
    }
    CHECK(wavelet_j_min(Grid(1, 4, 5)) == 1); // W < 8 keeps W per axis
}

TEST_CASE("analyze then synthesize reconstructs") {
    for (Grid g : {Grid(1, 64, 6), Grid(1, 8, 8), Grid(2, 4, 3)}) {
        SampledFunction f = noise(g, 3);
        CHECK(max_rel_err(f, synthesize(analyze(f))) <= 1e-10);
    }
}

TEST_CASE("analysis preserves the l2 energy budget") {
    // orthonormal filters: sum of squared coefficients = sum of squared
    // samples * dx^d (the analyze normalization)
    Grid g(1, 32, 6);
    SampledFunction f = noise(g, 5);
    WaveletCoeffs c = analyze(f);
    double coeff_sq = 0.0;
    for (double x : c.scaling) coeff_sq += x * x;
    for (const auto& lvl : c.details)
        for (const auto& block : lvl)
            for (double x : block) coeff_sq += x * x;
    double sample_sq = 0.0;
    for (double x : f.v) sample_sq += x * x;
    CHECK(coeff_sq == doctest::Approx(sample_sq * g.cell()).epsilon(1e-11));
}

TEST_CASE("single detail coefficient has exact norm weight") {
    Grid g(1, 64, 6);
    WaveletCoeffs c = analyze(SampledFunction(g));
    const double amp = 0.8125;
    for (int j : {-2, 0, 3}) {
        for (auto& lvl : c.details)
            for (auto& block : lvl) std::fill(block.begin(), block.end(), 0.0);
        c.details[size_t(j - c.j_min)][0][1] = amp;
        for (double p : {1.0, 2.0}) {
            SmoothnessParams sp{1.5, p, 1.0, 0};
            double expect = std::pow(2.0, double(j) * (sp.s + 0.5 - 1.0 / p)) * amp;
            CHECK(besov_norm_wavelet(c, sp).total == doctest::Approx(expect).epsilon(1e-13));
        }
        SmoothnessParams spi{1.5, infinity, 1.0, 0};
        double expect_inf = std::pow(2.0, double(j) * (spi.s + 0.5)) * amp;
        CHECK(besov_norm_wavelet(c, spi).total == doctest::Approx(expect_inf).epsilon(1e-13));
    }
}

TEST_CASE("a single coefficient synthesizes to a localized blob") {
    Grid g(1, 64, 10);
    WaveletCoeffs c = analyze(SampledFunction(g));
    const int j = 4;
    const int64_t k = 11;
    c.details[size_t(j - c.j_min)][0][size_t(k)] = 1.0;
    SampledFunction f = synthesize(c);
    int64_t lo = -1, hi = -1;
    for (int64_t i = 0; i < g.n_axis(); ++i) {
        if (f.v[size_t(i)] != 0.0) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    REQUIRE(lo >= 0);
    double width_units = double(hi - lo + 1) * g.dx();
    CHECK(width_units <= 15.0 * std::ldexp(1.0, -j) + 1e-12);
    double center_units = 0.5 * double(lo + hi) * g.dx();
    double predicted = std::ldexp(1.0, -j) * (double(k) + 7.5);
    CHECK(std::fabs(center_units - predicted) <= 0.05);
}

TEST_CASE("wavelet norm tracks the dilation exponent") {
    Grid g(1, 64, 10);
    SmoothnessParams sp{1.5, 2.0, 1.0, 0};
    std::vector<std::pair<double, double>> pts;
    for (int j = 0; j <= 3; ++j) {
        double w = std::ldexp(1.0, -j);
        SampledFunction b = sample_plateau_bump(g, {32.0, 0.0}, 0.15 * w, 0.45 * w);
        pts.push_back({std::ldexp(1.0, j), besov_norm_wavelet(b, sp).total});
    }
    auto fit = experiments::fit_scaling_exponent(pts);
    // width 2^-j scales the norm like 2^{j (s - 1/p)}
    CHECK(fit.slope == doctest::Approx(sp.s - 1.0 / sp.p).epsilon(0.15));
}

TEST_CASE("wavelet norm is stable under grid refinement") {
    SmoothnessParams sp{1.5, 2.0, 2.0, 0};
    double coarse = besov_norm_wavelet(
        sample_plateau_bump(Grid(1, 64, 6), {32.0, 0.0}, 2.0, 6.0), sp).total;
    double fine = besov_norm_wavelet(
        sample_plateau_bump(Grid(1, 64, 8), {32.0, 0.0}, 2.0, 6.0), sp).total;
    CHECK(std::fabs(fine - coarse) <= 0.05 * coarse);
}

TEST_CASE("two dimensions: three orientations and reconstruction") {
    Grid g(2, 4, 3);
    SampledFunction f = noise(g, 9);
    WaveletCoeffs c = analyze(f);
    CHECK(c.orientations() == 3);
    for (const auto& lvl : c.details) REQUIRE(lvl.size() == 3);
    CHECK(max_rel_err(f, synthesize(c)) <= 1e-10);
}

TEST_CASE("smoothness outside the certificate is rejected") {
    Grid g(1, 16, 4);
    SampledFunction f = noise(g, 11);
    CHECK_THROWS_AS(besov_norm_wavelet(f, SmoothnessParams{2.6, 2.0, 2.0, 0}),
                    invalid_params_error);
    CHECK_THROWS_AS(besov_norm_wavelet(f, SmoothnessParams{-0.5, 2.0, 2.0, 0}),
                    invalid_params_error);
}
