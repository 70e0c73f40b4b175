#include "besov/params.hpp"

#include <cmath>
#include <sstream>

namespace besov {
namespace {

bool valid_exponent(double p) { return p > 0.0 && !std::isnan(p); }

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

std::string to_string(Characterization c) {
    switch (c) {
        case Characterization::fourier: return "fourier";
        case Characterization::difference: return "difference";
        case Characterization::wavelet: return "wavelet";
    }
    return "?";
}

Characterization characterization_from_string(const std::string& name) {
    if (name == "fourier") return Characterization::fourier;
    if (name == "difference") return Characterization::difference;
    if (name == "wavelet") return Characterization::wavelet;
    throw invalid_params_error("unknown characterization \"" + name +
                               "\" (expected fourier, difference, or wavelet)");
}

void SmoothnessParams::validate_basic() const {
    if (!valid_exponent(p))
        throw invalid_params_error("requires p in (0, inf] (got p=" + fmt(p) + ")");
    if (!valid_exponent(q))
        throw invalid_params_error("requires q in (0, inf] (got q=" + fmt(q) + ")");
    if (!std::isfinite(s)) throw invalid_params_error("requires finite s (got s=" + fmt(s) + ")");
    if (m < 0) throw invalid_params_error("requires difference order m >= 1 (got m=" + fmt(m) + ")");
}

void SmoothnessParams::validate_difference(int d) const {
    validate_basic();
    double lower = d * std::max(0.0, 1.0 / p - 1.0);
    if (!(s > lower))
        throw invalid_params_error("difference characterization requires s > d*max(0, 1/p - 1) = " +
                                   fmt(lower) + " (got s=" + fmt(s) + ")");
    int mm = order();
    if (!(s < mm))
        throw invalid_params_error("difference characterization requires s < m (got s=" + fmt(s) +
                                   ", m=" + fmt(mm) + ")");
}

void SmoothnessParams::validate_wavelet() const {
    validate_basic();
    if (!(s > 0.0))
        throw invalid_params_error("wavelet characterization requires s > 0 (got s=" + fmt(s) + ")");
    if (!(s < wavelet_s_max))
        throw invalid_params_error("wavelet characterization certified only for s < " +
                                   fmt(wavelet_s_max) + " (got s=" + fmt(s) + ")");
}

void PeetreParams::validate() const {
    if (!(b > 0.0)) throw invalid_params_error("requires b > 0 (got b=" + fmt(b) + ")");
    if (!(a > 0.0)) throw invalid_params_error("requires a > 0 (got a=" + fmt(a) + ")");
}

void LocalizationParams::validate(int d) const {
    base.validate_difference(d);
    if (!valid_exponent(v))
        throw invalid_params_error("requires v in (0, inf] (got v=" + fmt(v) + ")");
}

double lq_aggregate(const std::vector<double>& vals, double q) {
    if (!valid_exponent(q)) throw invalid_params_error("requires q in (0, inf]");
    if (q == infinity) {
        double m = 0.0;
        for (double x : vals) m = std::max(m, x);
        return m;
    }
    double acc = 0.0;
    for (double x : vals) acc += std::pow(x, q);
    return std::pow(acc, 1.0 / q);
}

} // namespace besov
