#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "birch/kernel.hpp"

namespace birch {

// Text format, version 1:
//
//   version=1          (optional)
//   dim=2
//   label=free text    (optional, single line)
//   1 0
//   -1/3 0.25
//
// One point per line; coordinates are integers, fractions a/b or finite
// decimals, all parsed exactly. Blank lines and lines starting with '#' are
// ignored. The JSON variant carries the same fields:
//
//   {"version": 1, "dim": 2, "label": "...", "points": [["1", "0"], ...]}
//
// where coordinates are strings in the same syntax or JSON integers.

inline constexpr int kConfigFormatVersion = 1;

/// Throws ParseError with the offending line and field.
Configuration read_configuration(std::string_view text);
std::string write_configuration(const Configuration& X);

Configuration read_configuration_json(std::string_view text);
std::string write_configuration_json(const Configuration& X);

/// Pick the format by extension: ".json" is JSON, anything else is text.
Configuration load_configuration(const std::filesystem::path& path);
void save_configuration(const std::filesystem::path& path, const Configuration& X);

}  // namespace birch
