#pragma once

/**
 * @file fixed_point_data.hpp
 * @brief Weight data of a circle action with isolated fixed points.
 *
 * A FixedPointData value describes a 2n-dimensional closed oriented manifold
 * with an S^1-action through its m fixed points only: each fixed point carries
 * the n weights of its tangent representation and a sign. Every type here is
 * an immutable value; constructors validate and throw InvalidData otherwise.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "circact/rational.hpp"

namespace circact {

using Weight = std::int64_t;

// Positive integer weights, kept in descending order.
class WeightMultiset {
 public:
  // Throws InvalidData if any weight is < 1 (fixed points must be isolated).
  explicit WeightMultiset(std::vector<Weight> weights);
  WeightMultiset(std::initializer_list<Weight> weights)
      : WeightMultiset(std::vector<Weight>(weights)) {}

  std::span<const Weight> values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  Weight operator[](std::size_t i) const { return weights_[i]; }
  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

  Weight max() const { return weights_.empty() ? 0 : weights_.front(); }
  Weight gcd() const;
  BigInt product() const;

  friend auto operator<=>(const WeightMultiset&, const WeightMultiset&) = default;
  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

 private:
  std::vector<Weight> weights_;
};

enum class Sign : int { Minus = -1, Plus = 1 };

constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
char sign_char(Sign s);

struct FixedPoint {
  WeightMultiset weights;
  Sign sign = Sign::Plus;

  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

class FixedPointData {
 public:
  // Requires half_dimension >= 1, at least one point, and exactly
  // half_dimension weights per point.
  FixedPointData(int half_dimension, std::vector<FixedPoint> points);

  int half_dimension() const { return half_dimension_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FixedPoint>& points() const { return points_; }
  const FixedPoint& operator[](std::size_t i) const { return points_[i]; }

  Weight max_weight() const;
  Weight global_gcd() const;

  friend auto operator<=>(const FixedPointData&, const FixedPointData&) = default;
  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int half_dimension_;
  std::vector<FixedPoint> points_;
};

// Convenience builder for the three-point, four-weight setting.
FixedPointData make_data(std::initializer_list<std::pair<std::initializer_list<Weight>, Sign>> points);

// Divides every weight by the GCD of all weights, making the action effective.
FixedPointData normalize_faithful(const FixedPointData& data);

// GCD of the weights at each point, in point order.
std::vector<Weight> pointwise_gcd(const FixedPointData& data);

// Same weights, every sign negated (orientation reversal).
FixedPointData reverse_orientation(const FixedPointData& data);

// Deduplication representative: points sorted descending by (weights, sign),
// oriented so that + is the majority sign. On a tie the orientation whose sign
// sequence has + at the first differing position wins.
FixedPointData canonical_form(const FixedPointData& data);

// "{4,2,1,1}-, {4,2,3,3}+, {3,3,1,1}+"
std::string to_string(const FixedPointData& data);
std::string to_string(const WeightMultiset& weights);

}  // namespace circact
