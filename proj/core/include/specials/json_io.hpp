#pragma once

#include <json.hpp>

#include "specials/classify.hpp"
#include "specials/hj.hpp"
#include "specials/ladder.hpp"
#include "specials/quiver.hpp"
#include "specials/resolution.hpp"

namespace specials {

// All output uses ordered_json with integer values only, so serialization
// is byte-stable.
using json = nlohmann::ordered_json;

json hj_json(const hj_data& d);
json graph_json(const resolution_graph& G, const fundamental_cycle_t& zf);
json quiver_json(const translation_quiver& Q, const std::vector<int>* dual = nullptr);
json profile_json(const translation_quiver& Q, const count_vector& profile);
json multiset_json(const translation_quiver& Q, const std::map<int, long long>& ms);
json trace_json(const translation_quiver& Q, const ladder_trace& tr);
json report_json(const classification_report& rep);

}  // namespace specials
