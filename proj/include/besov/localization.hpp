#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "besov/grid.hpp"
#include "besov/params.hpp"
#include "besov/smoothness.hpp"

namespace besov {

// Integer-translate partition of unity: psi(x) = prod_i w(x_i) with
// w(x) = step(1 - |x|); translates psi_mu = psi(. - mu), mu in {0..W-1}^d,
// sum to 1 everywhere. Requires r >= 3 so each window keeps enough samples.
struct PartitionOfUnity {
    Grid grid;
    SampledFunction psi; // centered at 0, support (-1, 1)^d, sampled periodically
    int64_t stride = 0;  // samples per unit cell, 2^r

    int64_t translate_count() const { return int64_t(std::llround(grid.volume())); }
    // mu = flat translate index (row-major over {0..W-1}^d)
    SampledFunction apply(int64_t mu, const SampledFunction& f) const;
};

PartitionOfUnity build_pou(const Grid& grid);

// Real coefficient sequence over the translate lattice, dense over {0..W-1}^d.
struct CoeffSeq {
    int d = 1;
    int W = 1;
    std::vector<double> c;

    static CoeffSeq zeros(const Grid& grid);
    static CoeffSeq coordinate(const Grid& grid, int64_t mu);
    double lp(double p) const;
    void normalize_lp(double p); // scale onto the unit l_p sphere
    std::string to_json() const; // [{"mu": [...], "c": ...}, ...], nonzeros only
};

// Per-translate norms ||psi_mu f|| under the chosen characterization.
struct LocalizedNorm {
    double total = 0.0;
    std::vector<double> per_translate;
};

// sup_mu ||psi_mu f|| (the localized norm with v = infinity).
double besov_norm_unif(const SampledFunction& f, const SmoothnessParams& params,
                       Characterization ch = Characterization::difference);

// l_v aggregation over translates; v = infinity coincides with besov_norm_unif.
LocalizedNorm besov_norm_localized(const SampledFunction& f, const LocalizationParams& params,
                                   Characterization ch = Characterization::difference);

// Multiplier-norm objective for a fixed f and coefficient sequence C:
//   { ||f * sum_mu C_mu psi_mu||_p^q
//     + sum_k ( 2^{ksp} max_h sum_mu |C_mu|^p ||D_h^m (psi_mu f)||_p^p )^{q/p} }^{1/q}
// over the same scale ladder and shift sets as the difference norm. For a
// coordinate sequence C = delta_nu this equals the q-combined difference norm
// of psi_nu f exactly.
class MObjective {
public:
    MObjective(const SampledFunction& f, const SmoothnessParams& params);

    double evaluate(const CoeffSeq& C) const;
    const PartitionOfUnity& pou() const { return pou_; }

private:
    SampledFunction f_;
    SmoothnessParams params_;
    PartitionOfUnity pou_;
    std::vector<SampledFunction> masked_;     // psi_mu * f
    std::vector<double> lp_masked_;           // ||psi_mu f||_p (p = inf path)
    // diff_pows_[k][h][mu] = ||D_h^m(psi_mu f)||_p^p  (p < inf)
    // diff_sups_[k][h][mu] = ||D_h^m(psi_mu f)||_inf  (p = inf)
    std::vector<std::vector<std::vector<double>>> diff_table_;
    std::vector<int> scale_k_;
};

double m_objective(const SampledFunction& f, const SmoothnessParams& params, const CoeffSeq& C);

struct MNormBudget {
    int n_random = 128;
    int ascent_sweeps = 6;
    uint64_t seed = 1729;
};

struct MNormResult {
    double value = 0.0;
    CoeffSeq witness;
    int candidates_evaluated = 0;
    int ascent_steps_accepted = 0;
    double ascent_gain = 0.0;       // relative improvement over best raw candidate
    bool witness_sign_constant = true;
    std::string witness_kind;       // "coordinate", "random", "block", "ascent"
};

// Estimates sup over the unit l_p ball of C of m_objective(f, C): coordinate
// sequences, seeded random sign/sparsity patterns, block-constant windows,
// then coordinate-ascent refinement from the best candidate. Deterministic for
// a fixed budget.
MNormResult m_norm_sup(const SampledFunction& f, const SmoothnessParams& params,
                       const MNormBudget& budget = {});

// Candidate recipe from the lower-bound construction: C_mu proportional to
// ||cover_mu g||_inf where cover_mu is 1 on [mu-1, mu+1]^d, normalized to the
// unit l_p sphere.
CoeffSeq cover_witness(const SampledFunction& g, const SmoothnessParams& params);

// Smooth cover bump for translate mu: 1 on [mu-1, mu+1]^d, support
// (mu-2, mu+2)^d. Requires W >= 4.
SampledFunction cover_bump(const Grid& grid, int64_t mu);

} // namespace besov
