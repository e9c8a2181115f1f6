#include "circact/hp2.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "circact/errors.hpp"

namespace circact {

std::string_view to_string(Family family) {
  return family == Family::Standard ? "Standard" : "SemiInteger";
}

Hp2ActionParams::Hp2ActionParams(std::int64_t d1, std::int64_t d2, std::int64_t d3)
    : doubled_{d1, d2, d3} {
  const std::string triple =
      "(" + std::to_string(d1) + ", " + std::to_string(d2) + ", " + std::to_string(d3) + ")";
  if (d1 < 0 || !(d1 < d2 && d2 < d3)) {
    throw InvalidParams("doubled parameters " + triple + " must satisfy 0 <= d1 < d2 < d3");
  }
  if ((d1 - d2) % 2 != 0 || (d2 - d3) % 2 != 0) {
    throw InvalidParams("doubled parameters " + triple + " must share one parity");
  }
}

Hp2ActionParams Hp2ActionParams::from_exponents(std::array<std::int64_t, 3> k, Family family) {
  std::array<std::int64_t, 3> d{};
  for (std::size_t i = 0; i < 3; ++i) {
    d[i] = std::abs(family == Family::Standard ? 2 * k[i] : 1 + 2 * k[i]);
  }
  std::sort(d.begin(), d.end());
  if (d[0] == d[1] || d[1] == d[2]) {
    throw InvalidParams("exponents give repeated |p_i|; the action has a non-isolated fixed set");
  }
  return Hp2ActionParams(d[0], d[1], d[2]);
}

std::array<Rational, 3> Hp2ActionParams::p() const {
  return {Rational(BigInt(static_cast<long>(doubled_[0])), 2),
          Rational(BigInt(static_cast<long>(doubled_[1])), 2),
          Rational(BigInt(static_cast<long>(doubled_[2])), 2)};
}

std::string Hp2ActionParams::p_string() const {
  const auto values = p();
  return "(" + values[0].to_string() + ", " + values[1].to_string() + ", " +
         values[2].to_string() + ")";
}

std::array<WeightMultiset, 3> raw_weights(const Hp2ActionParams& params) {
  const auto [d1, d2, d3] = params.doubled();
  const Weight s21 = (d2 + d1) / 2, t21 = (d2 - d1) / 2;
  const Weight s31 = (d3 + d1) / 2, t31 = (d3 - d1) / 2;
  const Weight s32 = (d3 + d2) / 2, t32 = (d3 - d2) / 2;
  return {WeightMultiset{s21, t21, s31, t31},
          WeightMultiset{s21, t21, s32, t32},
          WeightMultiset{s32, t32, s31, t31}};
}

Hp2ActionParams reduce_params(const Hp2ActionParams& params) {
  Weight g = 0;
  for (const auto& point : raw_weights(params)) g = std::gcd(g, point.gcd());
  const auto& d = params.doubled();
  return Hp2ActionParams(d[0] / g, d[1] / g, d[2] / g);
}

SignSolution sign_solve(const std::array<WeightMultiset, 3>& points) {
  std::array<Rational, 3> inverse;
  for (std::size_t i = 0; i < 3; ++i) {
    if (points[i].size() != 4) {
      throw DimensionMismatch("sign_solve expects four weights per point");
    }
    inverse[i] = Rational(BigInt(1), points[i].product());
  }

  std::optional<SignSolution> solution;
  for (std::size_t minus = 0; minus < 3; ++minus) {
    std::array<Sign, 3> signs{Sign::Plus, Sign::Plus, Sign::Plus};
    signs[minus] = Sign::Minus;
    Rational residual;
    for (std::size_t i = 0; i < 3; ++i) {
      residual += signs[i] == Sign::Plus ? inverse[i] : -inverse[i];
    }
    if (!residual.is_zero()) continue;
    if (solution) {
      throw Ambiguous("two sign patterns make the unit-class sum vanish");
    }
    solution = SignSolution{signs, residual};
  }
  if (!solution) {
    throw NoSolution("no sign pattern makes the unit-class sum vanish");
  }
  return *solution;
}

FixedPointData weights_from_params(const Hp2ActionParams& params) {
  auto weights = raw_weights(params);
  const auto solved = sign_solve(weights);
  std::vector<FixedPoint> points;
  for (std::size_t i = 0; i < 3; ++i) points.push_back({weights[i], solved.signs[i]});
  return canonical_form(normalize_faithful(FixedPointData(4, std::move(points))));
}

Recovery recover_params(const FixedPointData& data) {
  if (data.size() != 3 || data.half_dimension() != 4) {
    throw DimensionMismatch("parameter recovery needs three points with four weights each");
  }
  int plus = 0;
  for (const auto& p : data.points()) plus += p.sign == Sign::Plus ? 1 : 0;
  if (plus == 0 || plus == 3) {
    throw NotClassifiable("all fixed points carry the same sign");
  }
  const Sign minority = plus == 2 ? Sign::Minus : Sign::Plus;
  std::size_t q1 = 0;
  while (data[q1].sign != minority) ++q1;

  const auto w = data[q1].weights.values();
  const FixedPointData target = canonical_form(data);
  const Weight a1 = w[0];
  for (std::size_t j = 1; j < 4; ++j) {
    const Weight a2 = w[j];
    std::vector<Weight> rest;
    for (std::size_t i = 1; i < 4; ++i) {
      if (i != j) rest.push_back(w[i]);
    }
    const Weight b1 = rest[0], b2 = rest[1];  // descending already
    if (a1 != a2 + b1 + b2) continue;

    const std::int64_t d1 = b1 - b2, d2 = a1 - a2, d3 = a1 + a2;
    if (!(d1 < d2)) continue;
    const Hp2ActionParams params(d1, d2, d3);
    if (weights_from_params(params) != target) continue;

    // Assign q2/q3 among the two remaining points: q2 holds a1 and a2.
    const WeightMultiset q2_weights{a1, a2, (d3 + d1) / 2, (d3 - d1) / 2};
    std::array<std::size_t, 2> others{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != q1) others[k++] = i;
    }
    if (data[others[0]].weights != q2_weights) std::swap(others[0], others[1]);
    return Recovery{params, {q1, others[0], others[1]}};
  }
  throw NotClassifiable("no relabeling fits the weights of either HP^2 family: " + to_string(data));
}

}  // namespace circact
