#include "circact/constraints.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "circact/errors.hpp"

namespace circact {

namespace {

WeightPair ordered(Weight x, Weight y) { return x >= y ? WeightPair{x, y} : WeightPair{y, x}; }

bool same_pair(const WeightPair& p, Weight x, Weight y) { return p == ordered(x, y); }

// Removes one occurrence of each of x, y from a descending 4-multiset;
// returns the remaining pair, or nullopt if either is missing.
std::optional<WeightPair> remove_pair(std::span<const Weight> weights, Weight x, Weight y) {
  std::vector<Weight> rest(weights.begin(), weights.end());
  for (Weight v : {x, y}) {
    auto it = std::find(rest.begin(), rest.end(), v);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  return ordered(rest[0], rest[1]);
}

}  // namespace

std::array<WeightMultiset, 3> reconstruct(const Pairing& p) {
  return {WeightMultiset{p.a.first, p.a.second, p.b.first, p.b.second},
          WeightMultiset{p.a.first, p.a.second, p.c.first, p.c.second},
          WeightMultiset{p.b.first, p.b.second, p.c.first, p.c.second}};
}

std::vector<Pairing> enumerate_pairings(const FixedPointData& data) {
  if (data.size() != 3 || data.half_dimension() != 4) {
    throw DimensionMismatch("weight pairing needs three points with four weights each");
  }
  const Weight top = data.max_weight();
  std::set<Pairing> found;

  std::array<std::size_t, 3> order{0, 1, 2};
  do {
    auto q1 = data[order[0]].weights.values();
    auto q2 = data[order[1]].weights.values();
    const WeightMultiset& q3 = data[order[2]].weights;
    // q1 is sorted descending, so q1[0] is its maximum.
    if (q1[0] != top) continue;
    for (std::size_t j = 1; j < 4; ++j) {
      const WeightPair a{q1[0], q1[j]};
      auto b = remove_pair(q1, a.first, a.second);
      auto c = remove_pair(q2, a.first, a.second);
      if (!b || !c) continue;
      if (WeightMultiset{b->first, b->second, c->first, c->second} != q3) continue;
      found.insert(Pairing{a, *b, *c, order});
    }
  } while (std::next_permutation(order.begin(), order.end()));

  return {found.begin(), found.end()};
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
  }
  return "?";
}

std::optional<CaseLabel> classify_case(const Pairing& p) {
  const Weight a1 = p.a.first;
  const auto [b1, b2] = p.b;
  if (same_pair(p.c, a1 - b1, a1 - b2)) return CaseLabel::Case1;
  if (same_pair(p.c, b1, b2)) return CaseLabel::Case2;
  if (same_pair(p.c, a1 - b1, b2) && 2 * b2 != a1) return CaseLabel::Case3;
  if (same_pair(p.c, a1 - b2, b1) && 2 * b1 != a1) return CaseLabel::Case3;
  return std::nullopt;
}

MultiplicityProfile multiplicity_profile(const FixedPointData& data, Weight a) {
  if (a < 2) throw InvalidArgument("divisor must be at least 2, got " + std::to_string(a));
  MultiplicityProfile profile{a, {}};
  profile.counts.reserve(data.size());
  for (const auto& point : data.points()) {
    profile.counts.push_back(static_cast<int>(
        std::count_if(point.weights.begin(), point.weights.end(), [a](Weight w) { return w % a == 0; })));
  }
  return profile;
}

MultiplicityVerdict multiplicity_consistent(const FixedPointData& data) {
  const Weight top = data.max_weight();
  for (Weight a = 2; a <= top; ++a) {
    auto profile = multiplicity_profile(data, a);
    int nonzero = 0;
    int value = 0;
    bool equal = true;
    for (int c : profile.counts) {
      if (c == 0) continue;
      if (nonzero++ == 0) {
        value = c;
      } else if (c != value) {
        equal = false;
      }
    }
    if (!equal || nonzero == 1) {
      return {false, a, std::move(profile)};
    }
  }
  return {};
}

std::vector<Weight> residues_mod_a(const WeightMultiset& weights, Weight a) {
  if (a < 2) throw InvalidArgument("modulus must be at least 2, got " + std::to_string(a));
  std::vector<Weight> out;
  out.reserve(weights.size());
  for (Weight w : weights) {
    const Weight r = w % a;
    out.push_back(std::min(r, a - r));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool sign_pattern_valid(const FixedPointData& data) {
  bool plus = false;
  bool minus = false;
  for (const auto& p : data.points()) {
    (p.sign == Sign::Plus ? plus : minus) = true;
  }
  return plus && minus;
}

}  // namespace circact
