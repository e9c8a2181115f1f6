#pragma once

// JSON configuration files:
//
//   {
//     "dimension": 8,
//     "points": [ {"weights": [4, 2, 1, 1], "sign": -1}, ... ]
//   }
//
// One configuration per file.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "circact/fixed_point_data.hpp"

namespace circact::cli {

// Input the tool cannot turn into FixedPointData. what() names the location:
// "line 3, column 14: ..." for syntax errors, "points[1].weights[2]: ..." for
// field errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FixedPointData parse_config(std::string_view text);
FixedPointData load_config(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const FixedPointData& data);
// Two-space indented, trailing newline.
std::string dump_config(const FixedPointData& data);

}  // namespace circact::cli
