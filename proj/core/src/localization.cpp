#include "circact/localization.hpp"

#include <algorithm>
#include <string>

#include "circact/errors.hpp"

namespace circact {

namespace {

int monomial_degree(const std::vector<int>& monomial) {
  int d = 0;
  for (int k : monomial) d += k;
  return d;
}

}  // namespace

SymmetricPolynomial::SymmetricPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  bool first = true;
  for (auto& term : terms_) {
    for (int k : term.monomial) {
      if (k < 1) {
        throw InvalidSpec("elementary symmetric index " + std::to_string(k) + " is not positive");
      }
    }
    std::sort(term.monomial.begin(), term.monomial.end());
    const int d = monomial_degree(term.monomial);
    if (first) {
      degree_ = d;
      first = false;
    } else if (d != degree_) {
      throw InvalidSpec("mixed-degree polynomial: terms of degree " + std::to_string(degree_) +
                        " and " + std::to_string(d));
    }
  }
}

SymmetricPolynomial SymmetricPolynomial::one() { return SymmetricPolynomial(std::vector<Term>{Term{1, {}}}); }

SymmetricPolynomial SymmetricPolynomial::e(int k) { return SymmetricPolynomial(std::vector<Term>{Term{1, {k}}}); }

SymmetricPolynomial SymmetricPolynomial::product(std::vector<int> monomial,
                                                 std::int64_t coefficient) {
  return SymmetricPolynomial(std::vector<Term>{Term{coefficient, std::move(monomial)}});
}

int SymmetricPolynomial::max_index() const {
  int m = 0;
  for (const auto& term : terms_) {
    for (int k : term.monomial) m = std::max(m, k);
  }
  return m;
}

std::vector<BigInt> elementary_symmetric(std::span<const BigInt> values) {
  // e[k] after processing x is e[k] + x * e[k-1]; run k downwards.
  std::vector<BigInt> e(values.size() + 1, BigInt(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) {
      e[k] += values[i] * e[k - 1];
    }
  }
  return e;
}

BigInt eval_sigma(const SymmetricPolynomial& sigma, const WeightMultiset& weights) {
  const int n = static_cast<int>(weights.size());
  if (sigma.max_index() > n) {
    throw InvalidSpec("e_" + std::to_string(sigma.max_index()) + " is undefined on " +
                      std::to_string(n) + " weights");
  }
  std::vector<BigInt> squares;
  squares.reserve(weights.size());
  for (Weight w : weights) {
    BigInt x = static_cast<long>(w);
    squares.push_back(x * x);
  }
  const auto e = elementary_symmetric(squares);

  BigInt total = 0;
  for (const auto& term : sigma.terms()) {
    BigInt value = static_cast<long>(term.coefficient);
    for (int k : term.monomial) value *= e[k];
    total += value;
  }
  return total;
}

Rational localization_sum(const FixedPointData& data, const SymmetricPolynomial& sigma) {
  Rational sum;
  for (const auto& point : data.points()) {
    BigInt numerator = eval_sigma(sigma, point.weights);
    if (point.sign == Sign::Minus) numerator = -numerator;
    sum += Rational(numerator, point.weights.product());
  }
  return sum;
}

PontryaginReport pontryagin_report(const FixedPointData& data) {
  if (data.half_dimension() != 4) {
    throw DimensionMismatch("Pontryagin report needs 8-dimensional data, got dimension " +
                            std::to_string(2 * data.half_dimension()));
  }
  PontryaginReport r;
  r.unit_sum = localization_sum(data, SymmetricPolynomial::one());
  r.p1_sum = localization_sum(data, SymmetricPolynomial::e(1));
  r.p1_squared = localization_sum(data, SymmetricPolynomial::product({1, 1}));
  r.p2 = localization_sum(data, SymmetricPolynomial::e(2));
  r.signature_candidate = (Rational(7) * r.p2 - r.p1_squared) / Rational(45);
  return r;
}

}  // namespace circact
