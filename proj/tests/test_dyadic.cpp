#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "besov/dyadic.hpp"
#include "besov/errors.hpp"
#include "besov/params.hpp"
#include "besov/fft.hpp"
#include "besov/rng.hpp"

using namespace besov;

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

SampledFunction cosine_bin(const Grid& g, int bin) {
    SampledFunction f(g);
    for (int64_t i = 0; i < g.n_axis(); ++i)
        f.v[size_t(i)] = std::cos(two_pi * bin * double(i) / double(g.n_axis()));
    return f;
}

SampledFunction noise(const Grid& g, uint64_t seed) {
    Rng rng(seed);
    SampledFunction f(g);
    for (double& x : f.v) x = rng.normal();
    return f;
}

} // namespace

TEST_CASE("phi0 profile is 1 inside, 0 outside, monotone between") {
    CHECK(phi0_profile(0.0) == 1.0);
    CHECK(phi0_profile(1.0) == 1.0);
    CHECK(phi0_profile(1.5) == 0.0);
    CHECK(phi0_profile(10.0) == 0.0);
    double prev = phi0_profile(1.0);
    for (double x = 1.05; x < 1.5; x += 0.05) {
        double cur = phi0_profile(x);
        CHECK(cur <= prev);
        CHECK(cur >= 0.0);
        prev = cur;
    }
}

TEST_CASE("multipliers sum to one on every bin") {
    for (Grid g : {Grid(1, 64, 6), Grid(2, 4, 3)}) {
        DyadicPartition part = build_partition(g);
        for (int64_t i = 0; i < g.size(); ++i) {
            double s = 0.0;
            for (const auto& m : part.multipliers) s += m[size_t(i)];
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplier k is supported in its dyadic annulus") {
    Grid g(1, 64, 6);
    DyadicPartition part = build_partition(g);
    for (int k = 1; k <= part.K_max; ++k) {
        const double lo = std::ldexp(1.0, k - 1);
        const double hi = 1.5 * std::ldexp(1.0, k);
        for (int64_t i = 0; i < g.size(); ++i) {
            double xi = bin_frequency(g, i);
            if (xi <= lo || xi >= hi) CHECK(part.multipliers[size_t(k)][size_t(i)] == 0.0);
        }
    }
    // band 0 is the low-frequency cap
    for (int64_t i = 0; i < g.size(); ++i)
        if (bin_frequency(g, i) >= 1.5) CHECK(part.multipliers[0][size_t(i)] == 0.0);
}

TEST_CASE("K_max covers the largest lattice frequency") {
    Grid g(1, 64, 6);
    double max_xi = 0.0;
    for (int64_t i = 0; i < g.size(); ++i) max_xi = std::max(max_xi, bin_frequency(g, i));
    CHECK(std::ldexp(1.0, dyadic_K_max(g)) >= max_xi);
    CHECK(std::ldexp(1.0, dyadic_K_max(g) - 1) < max_xi);
}

TEST_CASE("band decomposition reassembles the function") {
    Grid g(1, 16, 5);
    SampledFunction f = noise(g, 3);
    BandDecomposition bands = band_decompose(f, build_partition(g));
    SampledFunction sum(g);
    for (const auto& b : bands.bands) sum = axpy(sum, 1.0, b);
    double scale = lp_norm(f, infinity);
    CHECK(lp_norm(axpy(sum, -1.0, f), infinity) <= 1e-11 * scale);
}

TEST_CASE("a wave on a multiplier plateau lands in exactly one band") {
    // bin 32 on W = 64 has |xi| = pi, inside band 2's plateau [3, 4]
    Grid g(1, 64, 6);
    SampledFunction f = cosine_bin(g, 32);
    const double xi = two_pi * 32.0 / 64.0;
    DyadicPartition part = build_partition(g);
    REQUIRE(part.K_max >= 3);
    BandDecomposition bands = band_decompose(f, part);
    double scale = lp_norm(f, infinity);
    for (size_t k = 0; k < bands.bands.size(); ++k) {
        double nk = lp_norm(bands.bands[k], infinity);
        if (k == 2)
            CHECK(lp_norm(axpy(bands.bands[k], -1.0, f), infinity) <= 1e-11 * scale);
        else
            CHECK(nk <= 1e-11 * scale);
    }
    CHECK(xi > 3.0);
    CHECK(xi < 4.0);
}

TEST_CASE("Fourier norm of a plateau wave has closed form") {
    Grid g(1, 64, 6);
    SampledFunction f = cosine_bin(g, 32); // band 2 exactly
    for (double s : {0.7, 1.5}) {
        SmoothnessParams sp{s, 2.0, 1.0, 0};
        double expect = std::pow(2.0, 2.0 * s) * lp_norm(f, 2.0);
        CHECK(besov_norm_fourier(f, sp).total == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("Fourier norm is homogeneous and zero only at zero") {
    Grid g(1, 16, 4);
    SampledFunction f = noise(g, 5);
    SmoothnessParams sp{1.2, 2.0, 2.0, 0};
    double base = besov_norm_fourier(f, sp).total;
    CHECK(base > 0.0);
    CHECK(besov_norm_fourier(scaled(f, 3.0), sp).total == doctest::Approx(3.0 * base).epsilon(1e-12));
    CHECK(besov_norm_fourier(SampledFunction(g), sp).total == 0.0);
}

TEST_CASE("invalid exponents are rejected") {
    Grid g(1, 16, 4);
    SampledFunction f = noise(g, 7);
    CHECK_THROWS_AS(besov_norm_fourier(f, SmoothnessParams{1.0, 0.0, 2.0, 0}),
                    invalid_params_error);
    CHECK_THROWS_AS(besov_norm_fourier(f, SmoothnessParams{1.0, 2.0, -1.0, 0}),
                    invalid_params_error);
}

TEST_CASE("Peetre maximal function brackets the sup") {
    Grid g(1, 16, 5);
    SampledFunction f = cosine_bin(g, 4);
    PeetreParams pp{2.0, 2.0};
    SampledFunction P = peetre_maximal(f, pp);
    double max_f = lp_norm(f, infinity);
    for (size_t i = 0; i < f.v.size(); ++i) {
        CHECK(P.v[i] >= std::fabs(f.v[i]) - 1e-15);
        CHECK(P.v[i] <= max_f + 1e-15);
    }
}

TEST_CASE("Peetre weight decay tightens the maximal function") {
    Grid g(1, 16, 5);
    SampledFunction f(g);
    f.v[0] = 1.0; // point mass
    SampledFunction wide = peetre_maximal(f, PeetreParams{1.0, 2.0});
    SampledFunction tight = peetre_maximal(f, PeetreParams{8.0, 2.0});
    // larger b decays faster away from the spike
    int64_t far = g.n_axis() / 2;
    CHECK(tight.v[size_t(far)] < wide.v[size_t(far)]);
    CHECK(wide.v[0] == 1.0);
}
