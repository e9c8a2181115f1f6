#pragma once

/**
 * @file verifier.hpp
 * @brief Admissibility pipeline, HP^2 classifier and bounded exhaustive search.
 *
 * admissible() runs every necessary condition on three-point, 8-dimensional
 * weight data and records each outcome. classify() matches admissible data to
 * an HP^2 family. search() enumerates all pairing-shaped configurations with
 * weights up to a bound and checks that the admissible ones are exactly the
 * HP^2 weight data.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circact/constraints.hpp"
#include "circact/fixed_point_data.hpp"
#include "circact/hp2.hpp"

namespace circact {

namespace check {
inline constexpr const char* kWeightPositivity = "weight positivity";
inline constexpr const char* kPointCount = "point count";
inline constexpr const char* kPointwiseGcd = "pointwise gcd";
inline constexpr const char* kGlobalGcd = "global gcd";
inline constexpr const char* kSignPattern = "sign pattern";
inline constexpr const char* kPairingExistence = "pairing existence";
inline constexpr const char* kUnitClass = "unit-class vanishing";
inline constexpr const char* kP1 = "p1 vanishing";
inline constexpr const char* kMultiplicity = "multiplicity consistency";
inline constexpr const char* kCaseClassification = "case classification";
}  // namespace check

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AdmissibilityReport {
  bool passed = false;
  std::vector<CheckOutcome> checks;

  // nullptr when every check passed.
  const CheckOutcome* first_failure() const;
  const CheckOutcome* find(std::string_view name) const;
};

// Always returns a report for 8-dimensional data; data with m != 3 fails the
// three-point checks. Throws DimensionMismatch when n != 4.
AdmissibilityReport admissible(const FixedPointData& data);

struct MatchResult {
  Hp2ActionParams params;
  Family family;
  std::array<std::size_t, 3> role_permutation;
  CaseLabel case_label;
};

struct ClassifyOutcome {
  AdmissibilityReport report;
  std::optional<MatchResult> match;  // set iff report.passed
};

// Throws TheoremViolation if admissible data does not regenerate from any
// HP^2 parameters.
ClassifyOutcome classify(const FixedPointData& data);

struct CaseCounts {
  std::size_t case1 = 0;
  std::size_t case2 = 0;
  std::size_t case3 = 0;
  std::size_t not_applicable = 0;
};

struct AdmissibleConfig {
  FixedPointData data;  // canonical form
  MatchResult match;
};

struct SearchSummary {
  Weight bound = 0;
  std::size_t pairings_enumerated = 0;     // (a, b, c) tuples visited
  std::size_t candidates_checked = 0;      // distinct canonical configurations
  std::vector<AdmissibleConfig> admissible_configs;  // sorted by canonical form
  std::size_t generated_count = 0;         // distinct HP^2 configurations within the bound
  CaseCounts case_counts;                  // over every pairing of every admissible config
  bool case3_b2_check = true;              // no pairing classified as a strict Case3
  bool generated_set_equal = false;
  bool pontryagin_match = true;            // p1^2 = 4 and p2 = 7 everywhere

  std::size_t count(Family family) const;
  // All theorem-level checks hold.
  bool verified() const;
};

// Distinct canonical HP^2 configurations whose maximal weight is <= bound,
// sorted.
std::vector<FixedPointData> generated_configurations(Weight bound);

// Throws InvalidArgument when bound < 2. workers = 0 picks the hardware
// concurrency. Results do not depend on the worker count.
SearchSummary search(Weight bound, unsigned workers = 0);

}  // namespace circact
