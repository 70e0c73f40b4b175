#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "besov/errors.hpp"
#include "besov/params.hpp"
#include "besov/localization.hpp"
#include "besov/rng.hpp"
#include "besov/smoothness.hpp"
#include "besov/steps.hpp"

using namespace besov;

namespace {

SampledFunction noise(const Grid& g, uint64_t seed) {
    Rng rng(seed);
    SampledFunction f(g);
    for (double& x : f.v) x = rng.normal();
    return f;
}

const Grid small_grid(1, 16, 4);

} // namespace

TEST_CASE("partition of unity invariants") {
    for (Grid g : {small_grid, Grid(2, 4, 3)}) {
        PartitionOfUnity pou = build_pou(g);
        CHECK(pou.stride == (int64_t(1) << g.r));
        CHECK(pou.translate_count() == int64_t(std::llround(g.volume())));
        for (double x : pou.psi.v) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0 + 1e-15);
        }
        SampledFunction ones = constant_function(g, 1.0);
        SampledFunction sum(g);
        for (int64_t mu = 0; mu < pou.translate_count(); ++mu)
            sum = axpy(sum, 1.0, pou.apply(mu, ones));
        for (double x : sum.v) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("each translate is supported in its own window") {
    Grid g = small_grid;
    PartitionOfUnity pou = build_pou(g);
    SampledFunction ones = constant_function(g, 1.0);
    for (int64_t mu : {int64_t(0), int64_t(5), int64_t(15)}) {
        SampledFunction piece = pou.apply(mu, ones);
        for (int64_t i = 0; i < g.n_axis(); ++i) {
            double x_units = double(i) * g.dx();
            double dist = std::fabs(x_units - double(mu));
            dist = std::min(dist, g.W - dist); // periodic distance
            if (dist >= 1.0) CHECK(piece.v[size_t(i)] == 0.0);
        }
    }
}

TEST_CASE("partition construction limits") {
    CHECK_THROWS_AS(build_pou(Grid(1, 16, 2)), invalid_params_error);
    CHECK_THROWS_AS(build_pou(Grid(1, 1, 6)), invalid_params_error);
    CHECK_NOTHROW(build_pou(Grid(1, 2, 3)));
}

TEST_CASE("coefficient sequences") {
    Grid g = small_grid;
    CoeffSeq z = CoeffSeq::zeros(g);
    CHECK(z.c.size() == 16);
    CHECK(z.lp(2.0) == 0.0);
    CoeffSeq e = CoeffSeq::coordinate(g, 3);
    CHECK(e.c[3] == 1.0);
    CHECK(e.lp(0.5) == 1.0);
    CHECK(e.lp(infinity) == 1.0);
    CoeffSeq f = e;
    f.c[7] = -3.0;
    f.normalize_lp(1.0);
    CHECK(f.lp(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(z.normalize_lp(2.0), invalid_params_error);
    CHECK(z.to_json() == "[]");
    CHECK(e.to_json().find("\"mu\"") != std::string::npos);
}

TEST_CASE("localized norm aggregates per-translate pieces") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 3);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    LocalizedNorm inf_norm = besov_norm_localized(f, {sp, infinity});
    REQUIRE(inf_norm.per_translate.size() == 16);
    double mx = 0.0;
    for (double x : inf_norm.per_translate) mx = std::max(mx, x);
    CHECK(inf_norm.total == mx);
    CHECK(besov_norm_unif(f, sp) == inf_norm.total);
    LocalizedNorm l2 = besov_norm_localized(f, {sp, 2.0});
    double acc = 0.0;
    for (double x : l2.per_translate) acc += x * x;
    CHECK(l2.total == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
    // l_v is nonincreasing in v
    LocalizedNorm l1 = besov_norm_localized(f, {sp, 1.0});
    CHECK(l1.total >= l2.total);
    CHECK(l2.total >= inf_norm.total);
}

TEST_CASE("localization parameter validation") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 5);
    CHECK_THROWS_AS(besov_norm_localized(f, {SmoothnessParams{1.2, 2.0, 1.0, 0}, 0.0}),
                    invalid_params_error);
    CHECK_THROWS_AS(besov_norm_localized(f, {SmoothnessParams{0.0, 2.0, 1.0, 0}, 2.0}),
                    invalid_params_error);
}

TEST_CASE("coordinate sequences reduce the objective to one localized piece") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 7);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    MObjective obj(f, sp);
    for (int64_t nu = 0; nu < obj.pou().translate_count(); ++nu) {
        double val = obj.evaluate(CoeffSeq::coordinate(g, nu));
        double ref = difference_norm_q_combined(obj.pou().apply(nu, f), sp);
        CHECK(val == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("objective is absolutely homogeneous in the coefficients") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 9);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    MObjective obj(f, sp);
    Rng rng(17);
    CoeffSeq c = CoeffSeq::zeros(g);
    for (double& x : c.c) x = rng.normal();
    double base = obj.evaluate(c);
    CoeffSeq c2 = c;
    for (double& x : c2.c) x *= -1.75;
    CHECK(obj.evaluate(c2) == doctest::Approx(1.75 * base).epsilon(1e-12));
}

TEST_CASE("objective rejects a mismatched coefficient length") {
    Grid g = small_grid;
    MObjective obj(noise(g, 11), SmoothnessParams{1.2, 2.0, 1.0, 0});
    CoeffSeq wrong = CoeffSeq::zeros(Grid(1, 8, 4));
    CHECK_THROWS_AS(obj.evaluate(wrong), invalid_params_error);
}

TEST_CASE("sup search dominates every coordinate and normalizes its witness") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 13);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    MNormBudget budget{16, 2, 99};
    MNormResult res = m_norm_sup(f, sp, budget);
    MObjective obj(f, sp);
    double coord_max = 0.0;
    for (int64_t nu = 0; nu < 16; ++nu)
        coord_max = std::max(coord_max, obj.evaluate(CoeffSeq::coordinate(g, nu)));
    CHECK(res.value >= coord_max * (1.0 - 1e-12));
    CHECK(res.witness.lp(sp.p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.candidates_evaluated > 16);
    CHECK(!res.witness_kind.empty());
}

TEST_CASE("a larger candidate budget never lowers the raw sup") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 15);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    // no ascent: the candidate stream for a smaller budget is a prefix
    double lo = m_norm_sup(f, sp, MNormBudget{8, 0, 42}).value;
    double hi = m_norm_sup(f, sp, MNormBudget{32, 0, 42}).value;
    CHECK(hi >= lo * (1.0 - 1e-15));
}

TEST_CASE("ascent only improves the estimate") {
    Grid g = small_grid;
    SampledFunction f = noise(g, 17);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    double raw = m_norm_sup(f, sp, MNormBudget{16, 0, 7}).value;
    MNormResult refined = m_norm_sup(f, sp, MNormBudget{16, 4, 7});
    CHECK(refined.value >= raw * (1.0 - 1e-15));
    CHECK(refined.ascent_gain >= 0.0);
}

TEST_CASE("sup estimate for the constant function is seed-stable") {
    Grid g = small_grid;
    SampledFunction one = constant_function(g, 1.0);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    double v1 = m_norm_sup(one, sp, MNormBudget{32, 2, 1}).value;
    double v2 = m_norm_sup(one, sp, MNormBudget{32, 2, 2}).value;
    double v3 = m_norm_sup(one, sp, MNormBudget{32, 2, 3}).value;
    double lo = std::min({v1, v2, v3}), hi = std::max({v1, v2, v3});
    CHECK(hi <= 1.05 * lo);
}

TEST_CASE("cover bumps and the witness recipe") {
    Grid g = small_grid;
    SampledFunction bump = cover_bump(g, 5);
    // flat equal to 1 on [mu-1, mu+1]
    int64_t at = 5 * (int64_t(1) << g.r);
    CHECK(bump.v[size_t(at)] == 1.0);
    CHECK_THROWS_AS(cover_bump(Grid(1, 2, 4), 0), invalid_params_error);

    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    CoeffSeq w = cover_witness(noise(g, 19), sp);
    CHECK(w.lp(sp.p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(cover_witness(SampledFunction(g), sp), invalid_params_error);
}
