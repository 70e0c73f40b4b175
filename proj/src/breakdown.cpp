#include "besov/breakdown.hpp"

#include <json.hpp>

namespace besov {

std::string NormBreakdown::to_json() const {
    nlohmann::json j;
    j["characterization"] = besov::to_string(characterization);
    j["grid"] = {{"d", grid.d}, {"W", grid.W}, {"r", grid.r}};
    j["s"] = s;
    j["p"] = std::isinf(p) ? nlohmann::json("inf") : nlohmann::json(p);
    j["q"] = std::isinf(q) ? nlohmann::json("inf") : nlohmann::json(q);
    if (m > 0) j["m"] = m;
    j["total"] = total;
    if (has_side_term) {
        j["side_term"] =
            characterization == Characterization::difference ? "lp" : "scaling";
        j["side_value"] = side_term;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms) {
        nlohmann::json e;
        e["k"] = t.k;
        if (characterization == Characterization::wavelet) e["orientation"] = t.orientation;
        e["value"] = t.value;
        arr.push_back(e);
    }
    j["terms"] = arr;
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2);
}

} // namespace besov
