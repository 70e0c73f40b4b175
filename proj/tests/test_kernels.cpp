#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "besov/kernels.hpp"
#include "besov/rng.hpp"

using namespace besov;

namespace {

std::vector<double> random_array(size_t n, uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal() * (1.0 + rng.uniform());
    return v;
}

const size_t sizes[] = {0, 1, 3, 5, 8, 17, 64, 1000};

double ref_sum_abs(const double* x, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

double ref_max_abs(const double* x, size_t n) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s = std::max(s, std::fabs(x[i]));
    return s;
}

} // namespace

TEST_CASE("scalar backend matches reference loops") {
    kernels::force("scalar");
    for (size_t n : sizes) {
        auto x = random_array(n, 11 + n);
        auto y = random_array(n, 23 + n);
        double sq = 0.0, sqrt_abs = 0.0, mad = 0.0;
        for (size_t i = 0; i < n; ++i) {
            sq += x[i] * x[i];
            sqrt_abs += std::sqrt(std::fabs(x[i]));
            mad = std::max(mad, std::fabs(x[i] - y[i]));
        }
        CHECK(kernels::sum_abs(x.data(), n) == doctest::Approx(ref_sum_abs(x.data(), n)).epsilon(1e-13));
        CHECK(kernels::sum_sq(x.data(), n) == doctest::Approx(sq).epsilon(1e-13));
        CHECK(kernels::sum_sqrt_abs(x.data(), n) == doctest::Approx(sqrt_abs).epsilon(1e-13));
        CHECK(kernels::max_abs(x.data(), n) == ref_max_abs(x.data(), n));
        CHECK(kernels::max_abs_diff(x.data(), y.data(), n) == mad);
        if (n > 0) {
            double mn = x[0];
            for (size_t i = 1; i < n; ++i) mn = std::min(mn, x[i]);
            CHECK(kernels::min_val(x.data(), n) == mn);
        }
    }
    kernels::force("auto");
}

TEST_CASE("scalar mutating primitives") {
    kernels::force("scalar");
    for (size_t n : sizes) {
        auto a = random_array(n, 31 + n);
        auto b = random_array(n, 47 + n);
        std::vector<double> dst(n, 0.0);
        kernels::mul(dst.data(), a.data(), b.data(), n);
        for (size_t i = 0; i < n; ++i) CHECK(dst[i] == a[i] * b[i]);
        auto acc = a;
        kernels::axpy(acc.data(), 2.5, b.data(), n);
        for (size_t i = 0; i < n; ++i) CHECK(acc[i] == a[i] + 2.5 * b[i]);
        auto m = a;
        kernels::max_abs_scaled(m.data(), 0.75, b.data(), n);
        for (size_t i = 0; i < n; ++i) CHECK(m[i] == std::max(a[i], 0.75 * std::fabs(b[i])));
    }
    kernels::force("auto");
}

TEST_CASE("sum_abs_pow agrees with pow loop") {
    auto x = random_array(257, 5);
    for (double p : {0.5, 1.0, 1.7, 2.0, 3.0}) {
        double ref = 0.0;
        for (double v : x) ref += std::pow(std::fabs(v), p);
        CHECK(kernels::sum_abs_pow(x.data(), x.size(), p) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("avx2 backend agrees with scalar") {
    if (!kernels::cpu_has_avx2()) {
        MESSAGE("cpu has no avx2; skipping");
        return;
    }
    bool have_avx2 = true;
    try {
        kernels::force("avx2");
    } catch (const std::exception&) {
        have_avx2 = false; // built without the avx2 unit
    }
    if (!have_avx2) {
        MESSAGE("binary has no avx2 backend; skipping");
        return;
    }
    CHECK(std::string(kernels::active().name) == "avx2");
    for (size_t n : sizes) {
        auto x = random_array(n, 101 + n);
        auto y = random_array(n, 211 + n);
        kernels::force("scalar");
        double s1 = kernels::sum_abs(x.data(), n);
        double q1 = kernels::sum_sq(x.data(), n);
        double r1 = kernels::sum_sqrt_abs(x.data(), n);
        double m1 = kernels::max_abs(x.data(), n);
        double v1 = kernels::min_val(x.data(), n);
        double d1 = kernels::max_abs_diff(x.data(), y.data(), n);
        kernels::force("avx2");
        CHECK(kernels::sum_abs(x.data(), n) == doctest::Approx(s1).epsilon(1e-12));
        CHECK(kernels::sum_sq(x.data(), n) == doctest::Approx(q1).epsilon(1e-12));
        CHECK(kernels::sum_sqrt_abs(x.data(), n) == doctest::Approx(r1).epsilon(1e-12));
        CHECK(kernels::max_abs(x.data(), n) == m1); // max has no reduction-order error
        CHECK(kernels::min_val(x.data(), n) == v1);
        CHECK(kernels::max_abs_diff(x.data(), y.data(), n) == d1);

        auto da = x, db = x;
        kernels::force("scalar");
        kernels::axpy(da.data(), 1.25, y.data(), n);
        kernels::force("avx2");
        kernels::axpy(db.data(), 1.25, y.data(), n);
        for (size_t i = 0; i < n; ++i) {
            // fma changes rounding; compare against the term magnitudes
            double scale = std::fabs(x[i]) + 1.25 * std::fabs(y[i]) + 1.0;
            CHECK(std::fabs(db[i] - da[i]) <= 1e-12 * scale);
        }
    }
    kernels::force("auto");
}

TEST_CASE("force rejects unknown backend names") {
    CHECK_THROWS(kernels::force("sse9"));
    kernels::force("auto");
    CHECK(kernels::active().name != nullptr);
}
