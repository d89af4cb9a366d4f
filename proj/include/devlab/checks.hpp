#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "devlab/oracle.hpp"

namespace devlab {

// Outcome tallies of one property across all checked terms. A property is
// skipped on a term when its ground-truth comparison would outgrow the search
// limits (never because the property "failed softly").
struct PropertyStat {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skip = 0;
};

struct CheckReport {
  std::uint64_t terms = 0;
  std::vector<PropertyStat> properties;  // fixed order, stable across runs
  std::uint64_t failures = 0;            // sum of fail over properties

  // First failing term (printed form) and the property it violated.
  std::optional<std::string> counterexample;
  std::optional<std::string> failed_property;
};

// Generates `count` terms from `params` (seed varied per term,
// deterministically) and runs every library invariant on each: metric laws,
// trace lengths and validity, essentiality counting, and agreement with the
// brute-force oracle where the state limit allows.
CheckReport run_checks(const GenParams& params, std::uint64_t count,
                       std::uint64_t state_limit = kDefaultStateLimit);

}  // namespace devlab
