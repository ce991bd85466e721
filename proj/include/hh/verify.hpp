#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hh/pwl.hpp"
#include "hh/ramification.hpp"

namespace hh::verify {

struct PropertyResult {
  std::string name;
  int cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing case, empty when passed
};

// Runs the property suites for the given scope ("all", "pwl",
// "ramification", "cyclotomic", "depth") with a seeded generator.
// `cases` scales the randomized suites; the documented defaults are met
// with cases >= 1000. Throws DomainError on an unknown scope.
std::vector<PropertyResult> run(const std::string& scope, std::uint64_t seed,
                                int cases);

// Validates a user-supplied extension-spec JSON document: schema, type
// invariants, and basic properties of its phi. Used for negative-path
// fixtures; failures come back as a failed PropertyResult.
PropertyResult check_spec_json(const std::string& text);

// Seeded generators, shared with the acceptance suite.
using Rng = std::mt19937_64;
Rat random_nonneg_rational(Rng& rng);
Rat random_positive_rational(Rng& rng);
RamificationFiltration random_filtration(Rng& rng);
PwlFunction random_pwl(Rng& rng, bool zero_at_origin);
ExtensionSpec random_spec(Rng& rng, int max_tower_depth = 1);

}  // namespace hh::verify
