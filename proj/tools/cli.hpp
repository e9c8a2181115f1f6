#pragma once

// Subcommands of the circact tool. Each returns the process exit code:
//   0  pass (admissible / verified)
//   1  inadmissible input
//   2  input error (unreadable file, malformed data, bad flags)
//   3  theorem violation: admissible data with no HP^2 match

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace circact::cli {

enum ExitCode : int {
  kPass = 0,
  kInadmissible = 1,
  kInputError = 2,
  kTheoremViolation = 3,
};

struct Hp2Options {
  std::vector<std::int64_t> k;        // with family
  std::string family = "standard";    // "standard" | "semi"
  std::vector<std::int64_t> doubled;  // alternative to k
};

struct SearchOptions {
  std::int64_t bound = 0;
  std::optional<std::filesystem::path> emit;
  unsigned workers = 0;
};

int cmd_check(const std::filesystem::path& path, bool json, std::ostream& out, std::ostream& err);
int cmd_hp2(const Hp2Options& options, std::ostream& out, std::ostream& err);
int cmd_classify(const std::filesystem::path& path, bool json, std::ostream& out, std::ostream& err);
int cmd_search(const SearchOptions& options, bool json, std::ostream& out, std::ostream& err);

// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circact::cli
