#pragma once

// Randomized property suites. Each suite draws `count` instances from a seeded
// generator and returns how many failed, with the first counterexample.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "circact/constraints.hpp"
#include "circact/fixed_point_data.hpp"
#include "circact/hp2.hpp"
#include "circact/localization.hpp"
#include "circact/rational.hpp"

namespace props {

using namespace circact;

struct Outcome {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  Sign sign() { return coin() ? Sign::Plus : Sign::Minus; }

  Rational rational() {
    const auto den = uniform(1, 50);
    return Rational(BigInt(static_cast<long>(uniform(-1000, 1000))), BigInt(static_cast<long>(den)));
  }

  FixedPointData data(int n, int m, Weight max_weight) {
    std::vector<FixedPoint> points;
    for (int i = 0; i < m; ++i) {
      std::vector<Weight> w;
      for (int k = 0; k < n; ++k) w.push_back(uniform(1, max_weight));
      points.push_back({WeightMultiset(std::move(w)), sign()});
    }
    return FixedPointData(n, std::move(points));
  }

  FixedPointData data() {
    return data(static_cast<int>(uniform(1, 5)), static_cast<int>(uniform(1, 4)), 12);
  }

  // A monomial in e_1..e_n of total degree d.
  std::vector<int> monomial(int n, int d) {
    std::vector<int> out;
    while (d > 0) {
      const int k = static_cast<int>(uniform(1, std::min(n, d)));
      out.push_back(k);
      d -= k;
    }
    return out;
  }

  std::vector<SymmetricPolynomial::Term> terms(int n, int d) {
    std::vector<SymmetricPolynomial::Term> out;
    const auto count = uniform(1, 4);
    for (int i = 0; i < count; ++i) out.push_back({uniform(-5, 5), monomial(n, d)});
    return out;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline void record(Outcome& o, bool passed, const std::function<std::string()>& describe) {
  ++o.instances;
  if (passed) return;
  if (o.failures++ == 0) o.first_failure = describe();
}

inline Outcome rational_field_axioms(std::uint64_t seed, std::size_t count) {
  Outcome o{"rational field axioms"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Rational a = g.rational(), b = g.rational(), c = g.rational();
    const bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                    a * (b + c) == a * b + a * c && a + (-a) == Rational(0) && a + b == b + a &&
                    (a.is_zero() || a * (Rational(1) / a) == Rational(1));
    record(o, ok, [&] { return a.to_string() + ", " + b.to_string() + ", " + c.to_string(); });
  }
  return o;
}

inline Outcome localization_linearity(std::uint64_t seed, std::size_t count) {
  Outcome o{"localization linear in sigma"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto data = g.data();
    const int n = data.half_dimension();
    const int d = static_cast<int>(g.uniform(0, 2 * n));
    const auto terms = g.terms(n, d);
    Rational per_term;
    for (const auto& t : terms) per_term += localization_sum(data, SymmetricPolynomial(std::vector<SymmetricPolynomial::Term>{t}));
    const Rational whole = localization_sum(data, SymmetricPolynomial(terms));
    record(o, whole == per_term, [&] { return to_string(data) + " degree " + std::to_string(d); });
  }
  return o;
}

inline Outcome homogeneity_scaling(std::uint64_t seed, std::size_t count) {
  Outcome o{"homogeneity scaling law"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto data = g.data();
    const int n = data.half_dimension();
    const int d = static_cast<int>(g.uniform(0, 2 * n));
    const SymmetricPolynomial sigma(g.terms(n, d));
    const long s = static_cast<long>(g.uniform(2, 5));

    std::vector<FixedPoint> scaled;
    for (const auto& p : data.points()) {
      std::vector<Weight> w(p.weights.begin(), p.weights.end());
      for (auto& x : w) x *= s;
      scaled.push_back({WeightMultiset(std::move(w)), p.sign});
    }
    const int exponent = 2 * d - n;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(s).get_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
    const Rational factor = exponent >= 0 ? Rational(power) : Rational(BigInt(1), power);

    const Rational lhs = localization_sum(FixedPointData(n, std::move(scaled)), sigma);
    const Rational rhs = factor * localization_sum(data, sigma);
    record(o, lhs == rhs, [&] { return to_string(data) + " scale " + std::to_string(s); });
  }
  return o;
}

inline Outcome canonical_form_symmetry(std::uint64_t seed, std::size_t count) {
  Outcome o{"canonical_form idempotent and symmetric"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto data = g.data();
    const auto c = canonical_form(data);

    auto points = data.points();
    g.shuffle(points);
    const FixedPointData permuted(data.half_dimension(), std::move(points));

    const bool ok = canonical_form(c) == c && canonical_form(permuted) == c &&
                    canonical_form(reverse_orientation(data)) == c &&
                    canonical_form(reverse_orientation(permuted)) == c;
    record(o, ok, [&] { return to_string(data); });
  }
  return o;
}

inline Outcome normalize_idempotent(std::uint64_t seed, std::size_t count) {
  Outcome o{"normalize_faithful idempotent"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // scale a random configuration so there is something to divide out
    const auto base = g.data();
    const Weight s = g.uniform(1, 6);
    std::vector<FixedPoint> scaled;
    for (const auto& p : base.points()) {
      std::vector<Weight> w(p.weights.begin(), p.weights.end());
      for (auto& x : w) x *= s;
      scaled.push_back({WeightMultiset(std::move(w)), p.sign});
    }
    const FixedPointData data(base.half_dimension(), std::move(scaled));
    const auto once = normalize_faithful(data);
    const bool ok = normalize_faithful(once) == once && once.global_gcd() == 1 && once == normalize_faithful(base);
    record(o, ok, [&] { return to_string(data); });
  }
  return o;
}

inline Outcome pairing_round_trip(std::uint64_t seed, std::size_t count) {
  Outcome o{"pairing reconstruction round trip"};
  Gen g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    // plant a pairing with a1 maximal, then hide it behind shuffles
    const Weight a1 = g.uniform(2, 12);
    auto pick = [&] { return g.uniform(1, a1); };
    const std::array<Weight, 5> rest{pick(), pick(), pick(), pick(), pick()};
    std::vector<std::vector<Weight>> pts{{a1, rest[0], rest[1], rest[2]},
                                         {a1, rest[0], rest[3], rest[4]},
                                         {rest[1], rest[2], rest[3], rest[4]}};
    for (auto& p : pts) g.shuffle(p);
    g.shuffle(pts);
    std::vector<FixedPoint> points;
    for (auto& p : pts) points.push_back({WeightMultiset(p), g.sign()});
    const FixedPointData data(4, std::move(points));

    const auto pairings = enumerate_pairings(data);
    bool ok = !pairings.empty();
    for (const auto& p : pairings) {
      const auto q = reconstruct(p);
      for (std::size_t r = 0; r < 3; ++r) ok = ok && q[r] == data[p.point_order[r]].weights;
      ok = ok && p.a.first == data.max_weight() && p.a.first >= p.a.second && p.b.first >= p.b.second &&
           p.c.first >= p.c.second;
    }
    record(o, ok, [&] { return to_string(data); });
  }
  return o;
}

// Deterministic sweep: for every generated configuration with d3 <= 24 and
// every weight a >= 2 present at two points, the residue multisets mod a at
// those points agree once the zero classes are removed.
inline Outcome shared_weight_residues() {
  Outcome o{"shared-weight residues agree on HP^2 data"};
  for (std::int64_t d3 = 2; d3 <= 24; ++d3) {
    for (std::int64_t d2 = d3 - 2; d2 >= 1; d2 -= 2) {
      for (std::int64_t d1 = d2 - 2; d1 >= 0; d1 -= 2) {
        const auto data = weights_from_params(Hp2ActionParams(d1, d2, d3));
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = i + 1; j < 3; ++j) {
            for (Weight a : data[i].weights) {
              if (a < 2) continue;
              const auto& wj = data[j].weights;
              if (std::find(wj.begin(), wj.end(), a) == wj.end()) continue;
              auto ri = residues_mod_a(data[i].weights, a);
              auto rj = residues_mod_a(wj, a);
              std::erase(ri, 0);
              std::erase(rj, 0);
              record(o, ri == rj, [&] { return to_string(data) + " a = " + std::to_string(a); });
            }
          }
        }
      }
    }
  }
  return o;
}

inline std::vector<Outcome> run_all(std::uint64_t seed, std::size_t count) {
  return {rational_field_axioms(seed, count),   localization_linearity(seed + 1, count),
          homogeneity_scaling(seed + 2, count), canonical_form_symmetry(seed + 3, count),
          normalize_idempotent(seed + 4, count), pairing_round_trip(seed + 5, count),
          shared_weight_residues()};
}

}  // namespace props
