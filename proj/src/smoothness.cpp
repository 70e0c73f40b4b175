#include "besov/smoothness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace besov {
namespace {

int log2_int(int64_t x) { return std::countr_zero(uint64_t(x)); }

struct Direction {
    LatticeShift unit;
    double length; // in sample steps
};

std::vector<Direction> directions(int d) {
    if (d == 1) return {{LatticeShift(1), 1.0}};
    const double rt2 = std::sqrt(2.0);
    return {{LatticeShift(1, 0), 1.0},
            {LatticeShift(0, 1), 1.0},
            {LatticeShift(1, 1), rt2},
            {LatticeShift(1, -1), rt2}};
}

} // namespace

std::vector<LatticeShift> modulus_shift_set(const Grid& grid, double t) {
    const double dx = grid.dx();
    std::vector<LatticeShift> shifts;
    for (const Direction& dir : directions(grid.d)) {
        const double step = dx * dir.length;
        int64_t n_max = int64_t(std::floor(t / step));
        while (n_max >= 1 && double(n_max) * step >= t) --n_max;
        if (n_max < 1) continue;
        std::vector<int64_t> ns;
        for (int j = 1; j <= 3; ++j) {
            double target = t * (1.0 - std::ldexp(1.0, -j));
            int64_t nj = int64_t(std::llround(target / step));
            ns.push_back(std::clamp<int64_t>(nj, 1, n_max));
        }
        ns.push_back(n_max);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (int64_t n : ns)
            shifts.push_back(LatticeShift(n * dir.unit.h[0], n * dir.unit.h[1]));
    }
    return shifts;
}

double modulus_of_smoothness(const SampledFunction& f, int m, double t, double p) {
    auto shifts = modulus_shift_set(f.grid, t);
    if (shifts.empty()) {
        std::ostringstream os;
        os << "no lattice shift resolves scale t=" << t << "; the minimum resolvable scale on this"
           << " grid is just above dx=" << f.grid.dx();
        throw invalid_params_error(os.str());
    }
    double best = 0.0;
    for (const auto& h : shifts) best = std::max(best, lp_norm(difference(f, h, m), p));
    return best;
}

namespace {

struct DiffLadder {
    double lp = 0.0;
    std::vector<NormTerm> terms;
    std::vector<std::string> notes;
};

DiffLadder difference_ladder(const SampledFunction& f, const SmoothnessParams& params) {
    const Grid& g = f.grid;
    params.validate_difference(g.d);
    const int m = params.order();
    DiffLadder out;
    out.lp = lp_norm(f, params.p);
    const int k_nominal = g.r + log2_int(g.W);
    int excluded_from = -1;
    for (int k = 0; k <= k_nominal; ++k) {
        const double t = std::ldexp(1.0, -k);
        if (t <= g.dx()) {
            excluded_from = k;
            break;
        }
        double w = std::pow(2.0, params.s * k) * modulus_of_smoothness(f, m, t, params.p);
        out.terms.push_back({k, 0, w});
    }
    if (excluded_from >= 0) {
        std::ostringstream os;
        os << "scales k=" << excluded_from << ".." << k_nominal
           << " excluded: t=2^-k does not exceed dx=" << g.dx();
        out.notes.push_back(os.str());
    }
    return out;
}

} // namespace

NormBreakdown besov_norm_difference(const SampledFunction& f, const SmoothnessParams& params) {
    DiffLadder ladder = difference_ladder(f, params);
    NormBreakdown bd;
    bd.characterization = Characterization::difference;
    bd.grid = f.grid;
    bd.s = params.s;
    bd.p = params.p;
    bd.q = params.q;
    bd.m = params.order();
    bd.side_term = ladder.lp;
    bd.has_side_term = true;
    bd.terms = ladder.terms;
    bd.notes = ladder.notes;
    std::vector<double> vals;
    for (const auto& t : bd.terms) vals.push_back(t.value);
    bd.total = ladder.lp + lq_aggregate(vals, params.q);
    return bd;
}

double difference_norm_q_combined(const SampledFunction& f, const SmoothnessParams& params) {
    DiffLadder ladder = difference_ladder(f, params);
    if (params.q == infinity) {
        double m = ladder.lp;
        for (const auto& t : ladder.terms) m = std::max(m, t.value);
        return m;
    }
    double acc = std::pow(ladder.lp, params.q);
    for (const auto& t : ladder.terms) acc += std::pow(t.value, params.q);
    return std::pow(acc, 1.0 / params.q);
}

} // namespace besov
