#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "besov/errors.hpp"

namespace besov {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Largest smoothness the wavelet characterization is certified for (limited by
// the regularity of the underlying D=8 filters).
inline constexpr double wavelet_s_max = 2.5;

enum class Characterization { fourier, difference, wavelet };

std::string to_string(Characterization c);
Characterization characterization_from_string(const std::string& name);

// Difference order used when none is requested: the smallest integer above s.
inline int default_m(double s) { return int(std::floor(s)) + 1; }

struct SmoothnessParams {
    double s = 1.0;
    double p = 2.0;
    double q = 2.0;
    int m = 0; // 0 = default_m(s)

    int order() const { return m > 0 ? m : default_m(s); }

    // p and q in (0, inf], s finite.
    void validate_basic() const;
    // Hypotheses for the difference characterization in dimension d:
    // s > d * max(0, 1/p - 1) and 0 < s < m.
    void validate_difference(int d) const;
    // 0 < s < wavelet_s_max.
    void validate_wavelet() const;
};

// Peetre maximal weight 1/(1 + |b z|^a).
struct PeetreParams {
    double b = 1.0;
    double a = 2.0;

    void validate() const;
};

inline double default_peetre_a(int d, double p) { return 2.0 * d / std::min(p, 1.0); }

struct LocalizationParams {
    SmoothnessParams base;
    double v = infinity; // l_v aggregation over translates; inf = uniform norm

    void validate(int d) const;
};

// (sum_i vals_i^q)^(1/q), max for q = infinity. vals must be >= 0.
double lq_aggregate(const std::vector<double>& vals, double q);

} // namespace besov
