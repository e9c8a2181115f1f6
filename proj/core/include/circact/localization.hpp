#pragma once

/**
 * @file localization.hpp
 * @brief Fixed-point localization sums for Pontryagin numbers.
 *
 * For a circle action with isolated fixed points q_1..q_m on M^{2n} and a
 * symmetric polynomial sigma,
 *
 *     <p_sigma(M), [M]> = sum_i sign(q_i) * sigma(a_{1i}^2, ..., a_{ni}^2) / prod_k a_{ki}
 *
 * where a_{ki} are the weights at q_i. The characteristic number vanishes when
 * deg sigma < n/2, which turns the sum into a constraint on the weights.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "circact/fixed_point_data.hpp"
#include "circact/rational.hpp"

namespace circact {

// Integer combination of products of elementary symmetric functions e_k,
// evaluated on the squared weights. Grading: deg e_k = k.
class SymmetricPolynomial {
 public:
  struct Term {
    std::int64_t coefficient = 0;
    std::vector<int> monomial;  // indices k, sorted ascending; empty = constant 1
  };

  SymmetricPolynomial() = default;
  // Throws InvalidSpec on an index < 1 or on terms of different degrees.
  explicit SymmetricPolynomial(std::vector<Term> terms);

  static SymmetricPolynomial one();
  static SymmetricPolynomial e(int k);
  static SymmetricPolynomial product(std::vector<int> monomial, std::int64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const { return degree_; }
  int max_index() const;

 private:
  std::vector<Term> terms_;
  int degree_ = 0;
};

// e_1..e_n of the given values; index 0 holds e_0 = 1.
std::vector<BigInt> elementary_symmetric(std::span<const BigInt> values);

// sigma at (w_1^2, ..., w_n^2). Throws InvalidSpec if an index exceeds n.
BigInt eval_sigma(const SymmetricPolynomial& sigma, const WeightMultiset& weights);

// Exact localization sum. Accepts any degree.
Rational localization_sum(const FixedPointData& data, const SymmetricPolynomial& sigma);

struct PontryaginReport {
  Rational unit_sum;
  Rational p1_sum;
  Rational p1_squared;
  Rational p2;
  // (7 p2 - p1^2) / 45: the degree-2 L-genus, an arithmetic cross-check
  // rather than a localization constraint.
  Rational signature_candidate;
};

// Requires 8-dimensional data (n = 4); throws DimensionMismatch otherwise.
PontryaginReport pontryagin_report(const FixedPointData& data);

}  // namespace circact
