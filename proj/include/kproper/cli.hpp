#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kproper/json_io.hpp"

namespace kproper::cli {

/// A backend resolved from a builtin name ("p2", "dp6", "dp1") or a JSON file
/// holding a fan, a Picard surface ({"r": ...}) or an abstract slice.
struct Backend {
  std::string name;
  std::shared_ptr<const ClassSpace> space;
  std::shared_ptr<const Fan> fan;   // toric backends only
  std::optional<int> picard_r;      // Picard backends only
  std::optional<AbstractSlice> slice;
};

Backend parse_input(const std::string& name_or_path);

/// Class coordinates from "1,1/2,3", a JSON file with "coeffs"/"coords", or a
/// JSON array literal. Errors name `flag` and the offending entry.
RatVector parse_coeffs(const std::string& inline_or_path, std::size_t expected, const std::string& flag);

enum class Format { json, text };

std::string render(const io::json& data, Format format, bool approx = false);
std::string render(const PropernessReport& report, Format format, bool approx = false);
std::string render(const FeasibilityReport& report, Format format, bool approx = false);

/// Runs one command line. Exit status: 0 on a completed analysis whatever
/// the verdict, 1 on input or processing errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kproper::cli
