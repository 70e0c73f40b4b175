#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "besov/errors.hpp"
#include "besov/params.hpp"
#include "besov/experiments.hpp"
#include "besov/io.hpp"
#include "besov/smoothness.hpp"
#include "besov/steps.hpp"
#include "besov/wavelet.hpp"

using namespace besov;
using namespace besov::experiments;
namespace fs = std::filesystem;

namespace {

const Grid desk(1, 64, 6);

int run_cli(const std::string& args) {
    std::string cmd = std::string(BESOV_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("bump train places one bump per unit cell") {
    Extremal e = bump_train(desk, {1.0, 1.0, 1.0, 1.0});
    CHECK(e.spec.kind == "bump_train");
    CHECK(e.spec.count == 4);
    CHECK(e.spec.spacing == 1.0);
    CHECK(lp_norm(e.f, infinity) == doctest::Approx(1.0).epsilon(1e-12));
    // supports are disjoint: the l1 mass is count times one bump's mass
    double one = lp_norm(bump_train(desk, {1.0}).f, 1.0);
    CHECK(lp_norm(e.f, 1.0) == doctest::Approx(4.0 * one).epsilon(1e-12));
}

TEST_CASE("bump train validates heights") {
    CHECK_THROWS_AS(bump_train(desk, {}), invalid_params_error);
    CHECK_THROWS_AS(bump_train(desk, {1.0, -2.0}), invalid_params_error);
    CHECK_THROWS_AS(bump_train(desk, {0.0}), invalid_params_error);
    CHECK_THROWS_AS(bump_train(desk, std::vector<double>(65, 1.0)), invalid_params_error);
    CHECK_NOTHROW(bump_train(desk, std::vector<double>(64, 1.0)));
}

TEST_CASE("lacunary series puts one coefficient on each level") {
    Grid deep(1, 64, 10);
    Extremal e = lacunary_series(deep, 4, 3, {1.0, 1.0, 1.0}, 1.5, 2.0);
    CHECK(e.spec.kind == "lacunary");
    CHECK(e.spec.level_lo == 4);
    CHECK(e.spec.level_hi == 6);
    // each level contributes exactly 1 to the coefficient-space norm
    SmoothnessParams sp{1.5, 2.0, 1.0, 0};
    CHECK(besov_norm_wavelet(e.f, sp).total == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("lacunary series validates its inputs") {
    Grid deep(1, 64, 10);
    CHECK_THROWS_AS(lacunary_series(Grid(2, 8, 5), 2, 2, {1.0, 1.0}, 1.5, 2.0),
                    invalid_params_error);
    CHECK_THROWS_AS(lacunary_series(deep, 4, 2, {1.0}, 1.5, 2.0), invalid_params_error);
    CHECK_THROWS_AS(lacunary_series(deep, -20, 2, {1.0, 1.0}, 1.5, 2.0), invalid_params_error);
    CHECK_THROWS_AS(lacunary_series(deep, 9, 2, {1.0, 1.0}, 1.5, 2.0), invalid_params_error);
}

TEST_CASE("multiplier pair satisfies the product identity") {
    Grid deep(1, 64, 10);
    MultiplierPairResult mp = multiplier_pair(deep, 4, 4, 1.5, 2.0);
    double scale = lp_norm(mp.f, infinity);
    SampledFunction diff = axpy(product(mp.f, mp.g), -1.0, mp.f);
    CHECK(lp_norm(diff, infinity) <= 1e-12 * scale);
    CHECK(lp_norm(mp.g, infinity) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("multiplier pair geometry limits") {
    Grid deep(1, 64, 10);
    // level 1 wavelets are wider than the plateau flat region
    CHECK_THROWS_AS(multiplier_pair(deep, 1, 4, 1.5, 2.0), invalid_params_error);
    // 40 centers at fixed spacing 8 do not fit on a period of 64
    CHECK_THROWS_AS(multiplier_pair(deep, 4, 40, 1.5, 2.0), invalid_params_error);
    // level 2 sits exactly at the geometric bound
    MultiplierPairResult ok = multiplier_pair(deep, 2, 2, 1.5, 2.0);
    double scale = lp_norm(ok.f, infinity);
    CHECK(lp_norm(axpy(product(ok.f, ok.g), -1.0, ok.f), infinity) <= 1e-12 * scale);
}

TEST_CASE("multiplier norm estimate is exactly 1 for f = 1") {
    SampledFunction one = constant_function(desk, 1.0);
    std::vector<SampledFunction> family = standard_family(desk, 5);
    family.resize(4);
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    auto [est, idx] = multiplier_norm_estimate(one, sp, family);
    CHECK(est == 1.0); // f g = g bitwise, so every ratio is exactly 1
    CHECK(idx < family.size());
}

TEST_CASE("multiplier norm estimate rejects degenerate inputs") {
    SmoothnessParams sp{1.2, 2.0, 1.0, 0};
    SampledFunction f = constant_function(desk, 1.0);
    CHECK_THROWS_AS(multiplier_norm_estimate(f, sp, {}), invalid_params_error);
    std::vector<SampledFunction> zeros(2, SampledFunction(desk));
    CHECK_THROWS_AS(multiplier_norm_estimate(f, sp, zeros), invalid_params_error);
    std::vector<SampledFunction> wrong(1, SampledFunction(Grid(1, 32, 6)));
    CHECK_THROWS_AS(multiplier_norm_estimate(f, sp, wrong), grid_mismatch_error);
}

TEST_CASE("algebra ratio needs nonzero factors") {
    SmoothnessParams sp{1.5, 2.0, 2.0, 0};
    SampledFunction b = bump_train(desk, {1.0}).f;
    CHECK(algebra_ratio(b, b, sp) > 0.0);
    CHECK_THROWS_AS(algebra_ratio(b, SampledFunction(desk), sp), invalid_params_error);
}

TEST_CASE("outside the algebra regime narrow bumps inflate the product ratio") {
    // s = 0.2 < 1/p = 1: the product bound degenerates as supports shrink
    Grid deep(1, 64, 10);
    SmoothnessParams sp{0.2, 1.0, 1.0, 0};
    auto bump_at = [&](double w) {
        return sample_plateau_bump(deep, {32.0, 0.0}, 0.15 * w, 0.45 * w);
    };
    double wide = algebra_ratio(bump_at(1.0), bump_at(1.0), sp);
    double narrow = algebra_ratio(bump_at(1.0 / 16.0), bump_at(1.0 / 16.0), sp);
    CHECK(narrow >= 2.0 * wide);
}

TEST_CASE("scaling fit recovers an exact power law") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {4.0, 8.0, 16.0, 32.0, 64.0}) pts.push_back({n, 7.0 * std::pow(n, 1.5)});
    ScalingFit fit = fit_scaling_exponent(pts);
    CHECK(fit.slope == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log2(7.0)).epsilon(1e-10));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.n == 5);
}

TEST_CASE("scaling fit of constant data has slope zero and full r2") {
    std::vector<std::pair<double, double>> pts = {{2, 3.5}, {4, 3.5}, {8, 3.5}, {16, 3.5}};
    ScalingFit fit = fit_scaling_exponent(pts);
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.r2 == 1.0);
}

TEST_CASE("scaling fit input validation") {
    std::vector<std::pair<double, double>> few = {{1, 1}, {2, 2}, {4, 4}};
    CHECK_THROWS_AS(fit_scaling_exponent(few), invalid_params_error);
    std::vector<std::pair<double, double>> neg = {{1, 1}, {2, -2}, {4, 4}, {8, 8}};
    CHECK_THROWS_AS(fit_scaling_exponent(neg), invalid_params_error);
    std::vector<std::pair<double, double>> same = {{4, 1}, {4, 2}, {4, 3}, {4, 4}};
    CHECK_THROWS_AS(fit_scaling_exponent(same), invalid_params_error);
}

TEST_CASE("standard family is deterministic in the seed") {
    std::vector<SampledFunction> a = standard_family(desk, 11);
    std::vector<SampledFunction> b = standard_family(desk, 11);
    std::vector<SampledFunction> c = standard_family(desk, 12);
    REQUIRE(a.size() == 50);
    REQUIRE(b.size() == 50);
    bool identical = true, all_same_other_seed = true, any_zero = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].v != b[i].v) identical = false;
        if (a[i].v != c[i].v) all_same_other_seed = false;
        if (lp_norm(a[i], infinity) == 0.0) any_zero = true;
    }
    CHECK(identical);
    CHECK(!all_same_other_seed);
    CHECK(!any_zero);
}

TEST_CASE("unknown suite names are rejected with the available list") {
    try {
        run_suite("prop-sharpness");
        FAIL("expected invalid_params_error");
    } catch (const invalid_params_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("bump-train") != std::string::npos);
        CHECK(msg.find("equivalence") != std::string::npos);
    }
    CHECK(suite_names().size() == 11);
}

TEST_CASE("suite reports land on disk with provenance columns") {
    fs::path dir = fs::temp_directory_path() / "besov_suite_report_test";
    fs::remove_all(dir);
    SuiteOptions opts;
    opts.out_dir = dir.string();
    SuiteReport rep = run_suite("bump-train", opts);
    CHECK(rep.suite == "bump-train");
    CHECK(!rep.rows.empty());
    CHECK(!rep.fits.empty());
    std::ifstream csv(dir / "bump-train.csv");
    REQUIRE(csv.good());
    std::string line;
    size_t rows = 0;
    bool header_seen = false, seed_seen = false, generator_seen = false;
    while (std::getline(csv, line)) {
        if (line.rfind("# seed:", 0) == 0) seed_seen = true;
        if (line.rfind("# generator: splitmix64-v1", 0) == 0) generator_seen = true;
        if (line.rfind("experiment,", 0) == 0) {
            header_seen = true;
            CHECK(line.find(",seed,") != std::string::npos);
            CHECK(line.find(",characterization,") != std::string::npos);
            continue;
        }
        if (!line.empty() && line[0] != '#') ++rows;
    }
    CHECK(header_seen);
    CHECK(seed_seen);
    CHECK(generator_seen);
    CHECK(rows == rep.rows.size());
    std::ifstream js(dir / "bump-train.json");
    REQUIRE(js.good());
    fs::remove_all(dir);
}

TEST_CASE("equivalence suite emits at least 150 report rows") {
    SuiteOptions opts; // no out_dir: nothing written
    SuiteReport rep = run_suite("equivalence", opts);
    CHECK(rep.rows.size() >= 150);
}

TEST_CASE("cli exit codes: 0 on success, 2 on bad hypotheses and bad usage") {
    fs::path fn = fs::temp_directory_path() / "besov_cli_case.bsvf";
    write_function(fn.string(), SampledFunction(desk)); // zero function
    CHECK(run_cli("norm " + fn.string() + " --char difference --s 1.5 --p 2 --q 1") == 0);
    CHECK(run_cli("norm " + fn.string() + " --char difference --s -1 --p 2 --q 1") == 2);
    CHECK(run_cli("norm " + fn.string() + " --char warblet --s 1.5 --p 2 --q 1") == 2);
    CHECK(run_cli("norm /besov/no/such/file.bsvf --char difference --s 1.5 --p 2 --q 1") == 2);
    CHECK(run_cli("experiment --suite no-such-suite --out /tmp/besov_cli_reports") == 2);
    CHECK(run_cli("nonsense-subcommand") == 2);
    CHECK(run_cli("--help") == 0);
    fs::remove(fn);
}
