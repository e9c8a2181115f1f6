#pragma once

/**
 * @file hp2.hpp
 * @brief Weight data of the two circle-action families on HP^2.
 *
 * Both families act by (x1:x2:x3) -> (t^{p1} x1 : t^{p2} x2 : t^{p3} x3) with
 * 0 <= p1 < p2 < p3 either all integers (standard family) or all half-integers
 * (semi-integer family). Parameters are stored doubled, d_i = 2 p_i, so both
 * families live in integer arithmetic and parity tells them apart. The three
 * fixed points carry weights
 *
 *     (1:0:0): |p2 +- p1|, |p3 +- p1|
 *     (0:1:0): |p2 +- p1|, |p3 +- p2|
 *     (0:0:1): |p3 +- p2|, |p3 +- p1|
 */

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "circact/fixed_point_data.hpp"
#include "circact/rational.hpp"

namespace circact {

enum class Family { Standard, SemiInteger };

std::string_view to_string(Family family);

class Hp2ActionParams {
 public:
  // Throws InvalidParams unless 0 <= d1 < d2 < d3 with equal parity.
  Hp2ActionParams(std::int64_t d1, std::int64_t d2, std::int64_t d3);

  // From the family exponents k_i: p_i = k_i (standard) or (1 + 2 k_i) / 2
  // (semi-integer). Any integers are accepted; the |2 p_i| are sorted, and
  // repeated values are rejected.
  static Hp2ActionParams from_exponents(std::array<std::int64_t, 3> k, Family family);

  const std::array<std::int64_t, 3>& doubled() const { return doubled_; }
  Family family() const { return doubled_[0] % 2 == 0 ? Family::Standard : Family::SemiInteger; }
  // p_i as exact rationals.
  std::array<Rational, 3> p() const;
  // "(0, 1, 3)" or "(1/2, 3/2, 5/2)"
  std::string p_string() const;

  friend auto operator<=>(const Hp2ActionParams&, const Hp2ActionParams&) = default;
  friend bool operator==(const Hp2ActionParams&, const Hp2ActionParams&) = default;

 private:
  std::array<std::int64_t, 3> doubled_;
};

// Weight multisets at (1:0:0), (0:1:0), (0:0:1), before any normalization.
std::array<WeightMultiset, 3> raw_weights(const Hp2ActionParams& params);

// The parameters whose weights are those of `params` divided by their GCD,
// i.e. the effective action with the same weight data up to scaling.
Hp2ActionParams reduce_params(const Hp2ActionParams& params);

// Signs from sign_solve, then normalize_faithful and canonical_form.
FixedPointData weights_from_params(const Hp2ActionParams& params);

struct SignSolution {
  std::array<Sign, 3> signs;
  Rational residual;  // the unit-class sum under `signs`; always zero
};

// The sign triple, with two + and one -, that makes sum sign_i / prod(weights_i)
// vanish. Throws NoSolution or Ambiguous.
SignSolution sign_solve(const std::array<WeightMultiset, 3>& points);

struct Recovery {
  Hp2ActionParams params;
  // role_permutation[r] = input index of q_{r+1}: q1 is the minority-sign point
  // {a1, a2, b1, b2} (the image of (0:1:0)), q2 shares {a1, a2} with it and q3
  // shares {b1, b2}.
  std::array<std::size_t, 3> role_permutation;
};

// Inverts the weight formulas: at the minority-sign point a1 = a2 + b1 + b2,
// and d3 = a1 + a2, d2 = a1 - a2, d1 = b1 - b2. Candidates are confirmed by
// regenerating the data. Throws DimensionMismatch for m != 3 or n != 4 and
// NotClassifiable when no candidate reproduces the input.
Recovery recover_params(const FixedPointData& data);

}  // namespace circact
