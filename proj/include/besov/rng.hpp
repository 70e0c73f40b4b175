#pragma once

#include <cmath>
#include <cstdint>

namespace besov {

// splitmix64-v1: fixed-algorithm generator so seeded streams are identical
// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return next_u64() % n; }

    double sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

    // Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double rho = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = rho * std::sin(a);
        have_cached_ = true;
        return rho * std::cos(a);
    }

private:
    uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace besov
