#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shk/decision.hpp"

namespace shk {

// Randomized theorem batteries: each check generates seeded instances,
// evaluates both sides of its implication or equivalence, and records any
// violating instance in the module text formats.
//
// Checks: hierarchy, duality, skeletal, cycles, cochordal, mdim1,
// truncation, polarization.
struct VerifyOptions {
  int vertices = 6;
  int facets = 6;
  int trials = 200;
  std::uint64_t seed = 1;
  int min_size = 1;
  int max_size = 0;  // 0: min(5, vertices - 1)
  std::vector<std::string> checks;  // empty: all
};

struct CheckOutcome {
  std::string name;
  long trials = 0;
  long violations = 0;
  long capacity_skips = 0;
  std::vector<std::string> violation_dumps;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.violations > 0) return false;
    return true;
  }
};

VerifyReport run_verify(const VerifyOptions& opts);

Json verify_to_json(const VerifyReport& report);
std::string verify_to_text(const VerifyReport& report);

}  // namespace shk
