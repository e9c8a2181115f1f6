#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "circact/errors.hpp"
#include "circact/hp2.hpp"
#include "cli.hpp"
#include "config_file.hpp"

using namespace circact;
using namespace circact::cli;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("circact_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "circact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kStandard = R"({"dimension": 8, "points": [
  {"weights": [4, 2, 1, 1], "sign": -1},
  {"weights": [4, 2, 3, 3], "sign": 1},
  {"weights": [1, 1, 3, 3], "sign": 1}]})";

}  // namespace

TEST_CASE("config parsing") {
  const auto data = parse_config(kStandard);
  CHECK(data.half_dimension() == 4);
  CHECK(data[0].sign == Sign::Minus);
  CHECK(data[1].weights == WeightMultiset{4, 3, 3, 2});

  CHECK(parse_config(dump_config(data)) == data);
}

TEST_CASE("config errors name their location") {
  auto message = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{\"dimension\": 8,\n  \"points\": [}") .rfind("line 2, column 14", 0) == 0);
  CHECK(message(R"({"points": []})") == "dimension: missing field");
  CHECK(message(R"({"dimension": 7, "points": []})").rfind("dimension:", 0) == 0);
  CHECK(message(R"({"dimension": 4, "points": [{"weights": [1, 0], "sign": 1}]})").rfind("points[0].weights[1]:", 0) == 0);
  CHECK(message(R"({"dimension": 4, "points": [{"weights": [1, 2, 3], "sign": 1}]})").rfind("points[0].weights:", 0) == 0);
  CHECK(message(R"({"dimension": 4, "points": [{"weights": [1, 2], "sign": 2}]})").rfind("points[0].sign:", 0) == 0);
  CHECK(message(R"({"dimension": 4, "points": [{"weights": [1, "x"], "sign": 1}]})").rfind("points[0].weights[1]:", 0) == 0);
}

TEST_CASE("check subcommand") {
  TempFile standard(kStandard);
  auto r = invoke({"check", standard.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("p1^2                 4") != std::string::npos);
  CHECK(r.out.find("p2                   7") != std::string::npos);

  TempFile all_plus(R"({"dimension": 8, "points": [
    {"weights": [4, 2, 1, 1], "sign": 1}, {"weights": [4, 2, 3, 3], "sign": 1},
    {"weights": [1, 1, 3, 3], "sign": 1}]})");
  r = invoke({"check", all_plus.path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] sign pattern") != std::string::npos);

  TempFile malformed("{\"dimension\": 8, \"points\": [");
  r = invoke({"check", malformed.path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 1") != std::string::npos);

  CHECK(invoke({"check", "/nonexistent/file.json"}).code == 2);

  TempFile six(R"({"dimension": 6, "points": [{"weights": [1, 2, 3], "sign": 1}]})");
  CHECK(invoke({"check", six.path.string()}).code == 2);
}

TEST_CASE("check --json is stable") {
  TempFile standard(kStandard);
  const auto a = invoke({"check", standard.path.string(), "--json"});
  const auto b = invoke({"check", standard.path.string(), "--json"});
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["admissible"] == true);
  CHECK(doc["pontryagin"]["p1_squared"] == "4");
  CHECK(doc["pontryagin"]["p2"] == "7");
  CHECK(doc["checks"].size() == 10);
}

TEST_CASE("hp2 subcommand") {
  auto r = invoke({"hp2", "--k", "0,1,3", "--family", "standard"});
  REQUIRE(r.code == 0);
  CHECK(parse_config(r.out) == weights_from_params(Hp2ActionParams(0, 2, 6)));

  r = invoke({"hp2", "--k", "0,1,2", "--family", "semi"});
  REQUIRE(r.code == 0);
  CHECK(parse_config(r.out) == weights_from_params(Hp2ActionParams(1, 3, 5)));

  r = invoke({"hp2", "--doubled", "1,3,5"});
  REQUIRE(r.code == 0);
  CHECK(parse_config(r.out) == weights_from_params(Hp2ActionParams(1, 3, 5)));

  CHECK(invoke({"hp2", "--doubled", "0,2,2"}).code == 2);
  CHECK(invoke({"hp2", "--k", "1,-1,2"}).code == 2);
  CHECK(invoke({"hp2", "--k", "0,1"}).code == 2);
  CHECK(invoke({"hp2"}).code == 2);
  CHECK(invoke({"hp2", "--family", "other", "--k", "0,1,2"}).code == 2);
}

TEST_CASE("classify subcommand") {
  TempFile standard(kStandard);
  auto r = invoke({"classify", standard.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("Standard, p = (0, 1, 3)") != std::string::npos);

  TempFile semi(R"({"dimension": 8, "points": [
    {"weights": [4, 1, 1, 2], "sign": -1}, {"weights": [1, 2, 3, 4], "sign": 1},
    {"weights": [1, 2, 2, 3], "sign": 1}]})");
  r = invoke({"classify", semi.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("SemiInteger, p = (1/2, 3/2, 5/2)") != std::string::npos);

  TempFile bad(R"({"dimension": 8, "points": [
    {"weights": [4, 2, 1, 1], "sign": 1}, {"weights": [4, 2, 3, 3], "sign": 1},
    {"weights": [1, 1, 3, 3], "sign": -1}]})");
  r = invoke({"classify", bad.path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] unit-class vanishing") != std::string::npos);
}

TEST_CASE("hp2 output feeds classify for every d3 <= 24") {
  for (std::int64_t d3 = 2; d3 <= 24; ++d3) {
    for (std::int64_t d2 = d3 - 2; d2 >= 1; d2 -= 2) {
      for (std::int64_t d1 = d2 - 2; d1 >= 0; d1 -= 2) {
        const auto doubled = std::to_string(d1) + "," + std::to_string(d2) + "," + std::to_string(d3);
        const auto generated = invoke({"hp2", "--doubled", doubled});
        REQUIRE(generated.code == 0);
        TempFile file(generated.out);
        const auto classified = invoke({"classify", file.path.string(), "--json"});
        CAPTURE(doubled);
        REQUIRE(classified.code == 0);
        const auto doc = nlohmann::json::parse(classified.out);
        const auto expected = reduce_params(Hp2ActionParams(d1, d2, d3)).doubled();
        CHECK(doc["match"]["doubled"].get<std::array<std::int64_t, 3>>() == expected);
      }
    }
  }
}

TEST_CASE("search subcommand") {
  auto r = invoke({"search", "--bound", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verification: PASS") != std::string::npos);

  r = invoke({"search", "--bound", "4", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["semi_integer"].get<int>() >= 1);
  CHECK(doc["case_counts"]["Case2"] == 0);
  CHECK(doc["generated_set_equal"] == true);

  const auto emit = std::filesystem::temp_directory_path() / ("circact_emit_" + std::to_string(::getpid()) + ".json");
  r = invoke({"search", "--bound", "5", "--emit", emit.string()});
  CHECK(r.code == 0);
  std::ifstream in(emit);
  const auto emitted = nlohmann::json::parse(in);
  CHECK(emitted.size() == 7);
  CHECK(emitted[0].contains("configuration"));
  CHECK(emitted[0]["match"].contains("family"));
  std::filesystem::remove(emit);

  CHECK(invoke({"search", "--bound", "1"}).code == 2);
  CHECK(invoke({"search"}).code == 2);
}
