// JSON interchange: fan/cone/point files in, deterministic reports out.
// Rationals travel as strings ("p/q" or "p"), infinity as "inf".
#pragma once

#include <string>

#include "json.hpp"
#include "tropquot/quotient.hpp"

namespace tropquot {

using Json = nlohmann::ordered_json;

Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);
Fan load_fan_file(const std::string& path, bool validate = true);

Cone cone_from_json(const Json& j);
Cone load_cone_file(const std::string& path);

AnalyticPoint point_from_json(const Fan& f, const Json& j);
AnalyticPoint load_point_file(const Fan& f, const std::string& path);

Json trop_to_json(const Fan& f, const TropPoint& u, bool display_exp = false);
Json monomial_to_json(const Fan& f, const MonomialPoint& m, bool display_exp = false);
Json orbit_to_json(const Fan& f, int cone_index);
Json validation_to_json(const FanValidation& v);
Json dual_to_json(const Cone& dual);
Json hilbert_to_json(const Cone& c, const IntMat& basis);
Json skeleton_to_json(const Fan& f, const SkeletonGraph& g);
Json quotient_report_to_json(const QuotientReport& r);

}  // namespace tropquot
