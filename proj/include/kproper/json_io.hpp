#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "kproper/picard.hpp"
#include "kproper/polytope.hpp"
#include "kproper/properness.hpp"
#include "kproper/sweep.hpp"
#include "kproper/toric.hpp"

namespace kproper::io {

using json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError at "offset N".
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

// Readers take the JSON pointer of `j` so errors can name the failing field.
Rational read_rational(const json& j, const std::string& ptr = "");
RatVector read_rational_list(const json& j, const std::string& ptr = "");
std::int64_t read_integer(const json& j, const std::string& ptr = "");
const json& field(const json& obj, std::string_view key, const std::string& ptr = "");

json to_json(const Rational& x);
json to_json(const RatVector& v);
json to_json(const IntMatrix& m);

json to_json(const Fan& fan);
Fan fan_from_json(const json& j, const std::string& ptr = "");

json to_json(const Polytope& p);
Polytope polytope_from_json(const json& j, const std::string& ptr = "");

json to_json(const PicardClass& c);
PicardClass picard_class_from_json(const json& j, const std::string& ptr = "");

json to_json(const AbstractSlice& s);
AbstractSlice slice_from_json(const json& j, const std::string& ptr = "");

json to_json(const SweepConfig& c);
SweepConfig sweep_config_from_json(const json& j, const std::string& ptr = "");

json to_json(const FeasibilityReport& r);
FeasibilityReport feasibility_report_from_json(const json& j, const std::string& ptr = "");

json to_json(const PropernessReport& r);
PropernessReport properness_report_from_json(const json& j, const std::string& ptr = "");

json to_json(const ConditionBounds& b);
ConditionBounds condition_bounds_from_json(const json& j, const std::string& ptr = "");

}  // namespace kproper::io
