#pragma once

#include <string>
#include <vector>

#include "besov/grid.hpp"
#include "besov/params.hpp"

namespace besov {

// One weighted term of a Besov norm: Fourier band k, difference scale k, or
// wavelet level (level + orientation).
struct NormTerm {
    int k = 0;           // band index / scale index / wavelet level label
    int orientation = 0; // wavelet only; 0 elsewhere
    double value = 0.0;  // the weighted term entering the l_q aggregation
};

struct NormBreakdown {
    Characterization characterization = Characterization::fourier;
    Grid grid;
    double s = 0.0, p = 0.0, q = 0.0;
    int m = 0;            // difference order when applicable, else 0
    double total = 0.0;
    double side_term = 0.0; // additive non-l_q part: L_p term (difference), scaling term (wavelet)
    bool has_side_term = false;
    std::vector<NormTerm> terms;
    std::vector<std::string> notes; // e.g. which scales were excluded and why

    std::string to_json() const; // pretty-printed object
};

} // namespace besov
