// Standalone property-suite runner. CIRCACT_SEED and CIRCACT_INSTANCES
// override the defaults.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "properties.hpp"

namespace {

std::uint64_t seed() {
  const char* s = std::getenv("CIRCACT_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20261016u;
}

std::size_t instances() {
  const char* s = std::getenv("CIRCACT_INSTANCES");
  return s ? std::strtoull(s, nullptr, 10) : 2000u;
}

void check(const props::Outcome& o) {
  INFO(o.name << ": " << o.failures << "/" << o.instances << " failed; first: " << o.first_failure);
  CHECK(o.instances >= 1000);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("rational field axioms") { check(props::rational_field_axioms(seed(), instances())); }
TEST_CASE("localization is linear in sigma") { check(props::localization_linearity(seed() + 1, instances())); }
TEST_CASE("homogeneity scaling law") { check(props::homogeneity_scaling(seed() + 2, instances())); }
TEST_CASE("canonical_form idempotence and symmetry") { check(props::canonical_form_symmetry(seed() + 3, instances())); }
TEST_CASE("normalize_faithful idempotence") { check(props::normalize_idempotent(seed() + 4, instances())); }
TEST_CASE("pairing reconstruction round trip") { check(props::pairing_round_trip(seed() + 5, instances())); }
TEST_CASE("shared-weight residues on HP^2 data") { check(props::shared_weight_residues()); }
