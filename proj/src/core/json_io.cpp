#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ortholab {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), errc::parse, "malformed JSON");
  return j;
}

BVFunction bv_from_value(const json& j) {
  require(j.is_object() && j.contains("segments") && j["segments"].is_array(), errc::parse,
          "function JSON needs a \"segments\" array");
  std::vector<Segment> segs;
  for (const auto& s : j["segments"]) {
    require(s.is_array() && s.size() == 4, errc::parse,
            "each segment must be [left, right, slope, intercept]");
    for (const auto& v : s) require(v.is_number(), errc::parse, "segment entries must be numbers");
    segs.push_back({s[0].get<double>(), s[1].get<double>(), s[2].get<double>(),
                    s[3].get<double>()});
  }
  require(j.contains("value_at_1") && j["value_at_1"].is_number(), errc::parse,
          "function JSON needs \"value_at_1\"");
  return BVFunction(std::move(segs), j["value_at_1"].get<double>());
}

std::vector<double> number_list(const json& j, const char* what) {
  std::vector<double> out;
  for (const auto& v : j) {
    require(v.is_number(), errc::parse, std::string(what) + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

BVFunction bv_from_json(const std::string& text) { return bv_from_value(parse(text)); }

std::string bv_to_json(const BVFunction& f) {
  nlohmann::ordered_json j;
  auto segs = nlohmann::ordered_json::array();
  for (const Segment& s : f.segments()) segs.push_back({s.left, s.right, s.slope, s.intercept});
  j["segments"] = segs;
  j["value_at_1"] = f.value_at_1();
  return j.dump();
}

WeightPlan plan_from_json(const std::string& text, long length_hint) {
  json j = parse(text);
  require(j.is_object() && j.contains("d") && j.contains("a"), errc::parse,
          "plan JSON needs \"d\" and \"a\"");
  DKind dk = DKind::Custom;
  AKind ak = AKind::Custom;
  std::vector<double> dc, ac;
  const json& d = j["d"];
  if (d.is_string()) {
    std::string name = d.get<std::string>();
    if (name == "unit") dk = DKind::Unit;
    else if (name == "maximal") dk = DKind::Maximal;
    else fail(errc::parse, "unknown d preset: " + name);
  } else if (d.is_array()) {
    dc = number_list(d, "d");
  } else {
    fail(errc::parse, "\"d\" must be a preset name or an array");
  }
  const json& a = j["a"];
  if (a.is_string()) {
    std::string name = a.get<std::string>();
    if (name == "inverse_k") ak = AKind::InverseK;
    else if (name == "inverse_sqrtk_log") ak = AKind::InverseSqrtKLog;
    else fail(errc::parse, "unknown a preset: " + name);
  } else if (a.is_array()) {
    ac = number_list(a, "a");
  } else {
    fail(errc::parse, "\"a\" must be a preset name or an array");
  }
  return WeightPlan(dk, ak, std::move(dc), std::move(ac), length_hint);
}

std::string plan_to_json(const WeightPlan& plan) {
  nlohmann::ordered_json j;
  switch (plan.d_kind()) {
    case DKind::Unit: j["d"] = "unit"; break;
    case DKind::Maximal: j["d"] = "maximal"; break;
    case DKind::Custom: j["d"] = plan.d_custom(); break;
  }
  switch (plan.a_kind()) {
    case AKind::InverseK: j["a"] = "inverse_k"; break;
    case AKind::InverseSqrtKLog: j["a"] = "inverse_sqrtk_log"; break;
    case AKind::Custom: j["a"] = plan.a_custom(); break;
  }
  return j.dump();
}

std::vector<std::pair<std::string, BVFunction>> functions_from_json(const std::string& text) {
  json j = parse(text);
  require(j.is_array(), errc::parse, "function list JSON must be an array");
  std::vector<std::pair<std::string, BVFunction>> out;
  long index = 0;
  for (const auto& item : j) {
    require(item.is_object(), errc::parse, "function entries must be objects");
    std::string name;
    if (item.contains("name")) {
      require(item["name"].is_string(), errc::parse, "function name must be a string");
      name = item["name"].get<std::string>();
    }
    if (item.contains("builtin")) {
      require(item["builtin"].is_string(), errc::parse, "builtin must be a string");
      std::string which = item["builtin"].get<std::string>();
      if (name.empty()) name = which;
      out.emplace_back(name, BVFunction::builtin(which));
    } else {
      if (name.empty()) name = "f" + std::to_string(index);
      out.emplace_back(name, bv_from_value(item));
    }
    ++index;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  require(is.good(), errc::io, "cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  require(!is.bad(), errc::io, "failed reading " + path);
  return ss.str();
}

}  // namespace ortholab
