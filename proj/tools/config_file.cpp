#include "config_file.hpp"

#include <fstream>
#include <sstream>

#include "circact/errors.hpp"

namespace circact::cli {

namespace {

using nlohmann::json;

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

std::int64_t integer_field(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer, got " + value.dump());
  return value.get<std::int64_t>();
}

}  // namespace

FixedPointData parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    throw ConfigError(location_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON (" +
                      e.what() + ")");
  }

  if (!doc.is_object()) fail("<root>", "expected an object with fields dimension and points");
  if (!doc.contains("dimension")) fail("dimension", "missing field");
  if (!doc.contains("points")) fail("points", "missing field");

  const std::int64_t dimension = integer_field(doc["dimension"], "dimension");
  if (dimension < 2 || dimension % 2 != 0) {
    fail("dimension", "must be a positive even integer, got " + std::to_string(dimension));
  }
  const auto n = static_cast<std::size_t>(dimension / 2);

  const json& points = doc["points"];
  if (!points.is_array() || points.empty()) fail("points", "expected a nonempty array");

  std::vector<FixedPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string at = "points[" + std::to_string(i) + "]";
    const json& p = points[i];
    if (!p.is_object()) fail(at, "expected an object with fields weights and sign");
    if (!p.contains("weights")) fail(at + ".weights", "missing field");
    if (!p.contains("sign")) fail(at + ".sign", "missing field");

    const json& weights = p["weights"];
    if (!weights.is_array()) fail(at + ".weights", "expected an array");
    if (weights.size() != n) {
      fail(at + ".weights", "expected " + std::to_string(n) + " weights for dimension " +
                                std::to_string(dimension) + ", got " + std::to_string(weights.size()));
    }
    std::vector<Weight> w;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      const std::string wat = at + ".weights[" + std::to_string(k) + "]";
      const std::int64_t value = integer_field(weights[k], wat);
      if (value < 1) {
        fail(wat, "weight must be a positive integer (isolated fixed points), got " + std::to_string(value));
      }
      w.push_back(value);
    }

    const std::int64_t sign = integer_field(p["sign"], at + ".sign");
    if (sign != 1 && sign != -1) fail(at + ".sign", "must be +1 or -1, got " + std::to_string(sign));

    out.push_back({WeightMultiset(std::move(w)), sign > 0 ? Sign::Plus : Sign::Minus});
  }
  return FixedPointData(static_cast<int>(n), std::move(out));
}

FixedPointData load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

nlohmann::ordered_json to_json(const FixedPointData& data) {
  nlohmann::ordered_json doc;
  doc["dimension"] = 2 * data.half_dimension();
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : data.points()) {
    nlohmann::ordered_json point;
    point["weights"] = std::vector<Weight>(p.weights.begin(), p.weights.end());
    point["sign"] = to_int(p.sign);
    points.push_back(std::move(point));
  }
  doc["points"] = std::move(points);
  return doc;
}

std::string dump_config(const FixedPointData& data) { return to_json(data).dump(2) + "\n"; }

}  // namespace circact::cli
