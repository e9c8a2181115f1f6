#include "circact/fixed_point_data.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "circact/errors.hpp"

namespace circact {

WeightMultiset::WeightMultiset(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (Weight w : weights_) {
    if (w < 1) {
      throw InvalidData("weight " + std::to_string(w) +
                        " is not positive; fixed points must be isolated");
    }
  }
  std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

Weight WeightMultiset::gcd() const {
  Weight g = 0;
  for (Weight w : weights_) g = std::gcd(g, w);
  return g;
}

BigInt WeightMultiset::product() const {
  BigInt p = 1;
  for (Weight w : weights_) p *= static_cast<long>(w);
  return p;
}

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

FixedPointData::FixedPointData(int half_dimension, std::vector<FixedPoint> points)
    : half_dimension_(half_dimension), points_(std::move(points)) {
  if (half_dimension_ < 1) {
    throw InvalidData("half dimension must be positive, got " + std::to_string(half_dimension_));
  }
  if (points_.empty()) {
    throw InvalidData("fixed-point data needs at least one point");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const FixedPoint& p = points_[i];
    if (p.weights.size() != static_cast<std::size_t>(half_dimension_)) {
      throw InvalidData("point " + std::to_string(i) + " has " +
                        std::to_string(p.weights.size()) + " weights, expected " +
                        std::to_string(half_dimension_));
    }
    if (p.sign != Sign::Plus && p.sign != Sign::Minus) {
      throw InvalidData("point " + std::to_string(i) + " has a sign other than +1/-1");
    }
  }
}

Weight FixedPointData::max_weight() const {
  Weight m = 0;
  for (const auto& p : points_) m = std::max(m, p.weights.max());
  return m;
}

Weight FixedPointData::global_gcd() const {
  Weight g = 0;
  for (const auto& p : points_) g = std::gcd(g, p.weights.gcd());
  return g;
}

FixedPointData make_data(
    std::initializer_list<std::pair<std::initializer_list<Weight>, Sign>> points) {
  std::vector<FixedPoint> out;
  int n = 0;
  for (const auto& [weights, sign] : points) {
    n = static_cast<int>(weights.size());
    out.push_back({WeightMultiset(weights), sign});
  }
  return FixedPointData(n, std::move(out));
}

FixedPointData normalize_faithful(const FixedPointData& data) {
  const Weight g = data.global_gcd();
  if (g == 1) return data;
  std::vector<FixedPoint> points;
  points.reserve(data.size());
  for (const auto& p : data.points()) {
    std::vector<Weight> w(p.weights.begin(), p.weights.end());
    for (auto& x : w) x /= g;
    points.push_back({WeightMultiset(std::move(w)), p.sign});
  }
  return FixedPointData(data.half_dimension(), std::move(points));
}

std::vector<Weight> pointwise_gcd(const FixedPointData& data) {
  std::vector<Weight> out;
  out.reserve(data.size());
  for (const auto& p : data.points()) out.push_back(p.weights.gcd());
  return out;
}

FixedPointData reverse_orientation(const FixedPointData& data) {
  std::vector<FixedPoint> points = data.points();
  for (auto& p : points) p.sign = flip(p.sign);
  return FixedPointData(data.half_dimension(), std::move(points));
}

namespace {

std::vector<FixedPoint> sorted_points(std::vector<FixedPoint> points) {
  std::sort(points.begin(), points.end(), std::greater<>());
  return points;
}

int plus_count(const std::vector<FixedPoint>& points) {
  return static_cast<int>(std::count_if(points.begin(), points.end(),
                                        [](const FixedPoint& p) { return p.sign == Sign::Plus; }));
}

}  // namespace

FixedPointData canonical_form(const FixedPointData& data) {
  auto as_given = sorted_points(data.points());
  auto flipped = sorted_points(reverse_orientation(data).points());

  const int m = static_cast<int>(as_given.size());
  const int plus = plus_count(as_given);
  bool take_flipped = false;
  if (2 * plus < m) {
    take_flipped = true;
  } else if (2 * plus == m) {
    for (int i = 0; i < m; ++i) {
      if (as_given[i].sign != flipped[i].sign) {
        take_flipped = flipped[i].sign == Sign::Plus;
        break;
      }
    }
  }
  return FixedPointData(data.half_dimension(), take_flipped ? std::move(flipped) : std::move(as_given));
}

std::string to_string(const WeightMultiset& weights) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) os << ',';
    os << weights[i];
  }
  os << '}';
  return os.str();
}

std::string to_string(const FixedPointData& data) {
  std::string out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i) out += ", ";
    out += to_string(data[i].weights);
    out += sign_char(data[i].sign);
  }
  return out;
}

}  // namespace circact
