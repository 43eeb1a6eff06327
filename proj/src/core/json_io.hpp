#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bv.hpp"
#include "weights.hpp"

namespace ortholab {

// Wire formats:
//   BVFunction  {"segments": [[left, right, slope, intercept], ...], "value_at_1": v}
//   WeightPlan  {"d": "unit"|"maximal"|[values], "a": "inverse_k"|"inverse_sqrtk_log"|[values]}
//   Function list: array of either {"builtin": "x"|"ramp"|"step2"} or a
//   BVFunction object, each optionally carrying a "name".

BVFunction bv_from_json(const std::string& text);
std::string bv_to_json(const BVFunction& f);

WeightPlan plan_from_json(const std::string& text, long length_hint = 4096);
std::string plan_to_json(const WeightPlan& plan);

std::vector<std::pair<std::string, BVFunction>> functions_from_json(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace ortholab
