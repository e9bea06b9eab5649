#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsp/exact.hpp"

namespace qsp {

// One verification record; pass means lhs = rhs exactly.
struct VerificationReport {
  std::string suite;
  std::string case_id;
  std::uint64_t seed = 0;
  std::vector<int> sizes;
  std::string lhs, rhs;
  std::string status;  // pass | fail | error
  std::string detail;  // offending pair / diagnostic when status = error
  long time_ms = 0;
};

std::string report_to_json(const VerificationReport& r);

// Report line with the timing field blanked, for determinism comparisons.
std::string report_normalized(const VerificationReport& r);

// Run options shared by the CLI and the verification suites.
struct RunConfig {
  std::string q = "2";
  std::string kappa1 = "1", kappa2 = "1", kappa3 = "1";
  std::vector<std::string> uC, vC, uB, vB;
  std::vector<std::string> rprime1, rprime3;
  std::optional<std::string> z, r1_at_z, r3_at_z;
  std::string c = "2";  // invariant-model constant for the scaling-limit kinds
  std::uint64_t seed = 1;
  int trials = 5;
  int max_a = 2, max_b = 2;
  int threads = 1;
  long bound = 40;
};

// Populate a RunConfig from a JSON file (rationals as "p/q" strings).
RunConfig run_config_from_file(const std::string& path);

}  // namespace qsp
