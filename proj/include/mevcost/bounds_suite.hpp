#pragma once

// Drives every certificate-producing bound across deterministic fixtures and
// seeded random payoffs/signals; used by the CLI `bounds-suite` command and
// the acceptance tests.

#include <cstdint>
#include <vector>

#include "mevcost/certificate.hpp"

namespace mevcost {

struct SuiteRecord {
  BoundCertificate certificate;
  std::string context;
};

struct SuiteResult {
  std::vector<SuiteRecord> records;
  int failures = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int n = 0;
  // Worst (largest) slack deficit of the worst-cost indicator saturation
  // checks; should be ~0 (the indicators attain the stabilizer bound).
  double worst_indicator_saturation_slack = 0.0;
};

// trials = 0 runs only the deterministic fixtures. inject_corruption flips a
// signal entry to verify that the suite actually reports violations.
SuiteResult run_bounds_suite(int n, std::uint64_t seed, int trials,
                             bool inject_corruption = false);

}  // namespace mevcost
