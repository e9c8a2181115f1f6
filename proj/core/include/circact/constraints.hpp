#pragma once

/**
 * @file constraints.hpp
 * @brief Combinatorial necessary conditions on three-fixed-point weight data.
 *
 * With three fixed points on an 8-manifold the twelve weights split into
 * pairs of equal weights at different points:
 *
 *     q1 = {a1, a2, b1, b2},  q2 = {a1, a2, c1, c2},  q3 = {b1, b2, c1, c2}
 *
 * with a1 the global maximum. Divisibility profiles and the shape of {c1, c2}
 * relative to a and b further restrict which data can come from an action.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "circact/fixed_point_data.hpp"

namespace circact {

using WeightPair = std::pair<Weight, Weight>;

struct Pairing {
  WeightPair a;  // shared by q1, q2
  WeightPair b;  // shared by q1, q3
  WeightPair c;  // shared by q2, q3
  // point_order[r] is the index of the input point playing role q_{r+1}.
  std::array<std::size_t, 3> point_order{0, 1, 2};

  friend auto operator<=>(const Pairing&, const Pairing&) = default;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// The three weight multisets (q1, q2, q3) a pairing describes.
std::array<WeightMultiset, 3> reconstruct(const Pairing& p);

// All distinct pairings with a1 the global maximum and each pair ordered
// descending. Requires m = 3, n = 4 (DimensionMismatch otherwise).
std::vector<Pairing> enumerate_pairings(const FixedPointData& data);

enum class CaseLabel { Case1 = 1, Case2 = 2, Case3 = 3 };

std::string_view to_string(CaseLabel label);

// Case1: {c} = {a1-b1, a1-b2}
// Case2: {c} = {b1, b2}
// Case3: {c} = {a1-b, b'} for {b, b'} = {b1, b2}, with b' != a1/2
// Earlier cases take priority. nullopt when nothing matches.
std::optional<CaseLabel> classify_case(const Pairing& p);

struct MultiplicityProfile {
  Weight divisor = 2;
  std::vector<int> counts;  // per point, weights divisible by divisor
};

// Throws InvalidArgument for a < 2.
MultiplicityProfile multiplicity_profile(const FixedPointData& data, Weight a);

struct MultiplicityVerdict {
  bool consistent = true;
  std::optional<Weight> violating_divisor;
  std::optional<MultiplicityProfile> violating_profile;
};

// For every a in [2, max weight] the nonzero counts must agree, and there must
// not be exactly one nonzero count (a positive-dimensional component of the
// Z_a-fixed set carries at least two fixed points).
MultiplicityVerdict multiplicity_consistent(const FixedPointData& data);

// Images of the weights in Z_a / +-1, i.e. min(w mod a, a - w mod a), sorted
// descending. Diagnostic only. Throws InvalidArgument for a < 2.
std::vector<Weight> residues_mod_a(const WeightMultiset& weights, Weight a);

// True iff both signs occur.
bool sign_pattern_valid(const FixedPointData& data);

}  // namespace circact
