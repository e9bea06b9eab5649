#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qsp/bethe.hpp"
#include "qsp/report.hpp"

namespace qsp {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  int max_a = 2;
  int max_b = 2;
  ExactScalar q = ExactScalar(2);
  ExactScalar kappa2 = ExactScalar(5, 3);
  long bound = 40;
  int threads = 1;
};

// One verification case: a deferred computation returning (lhs, rhs) text.
struct SuiteCase {
  std::string suite;
  std::string id;
  std::uint64_t seed = 0;
  std::vector<int> sizes;
  std::function<std::pair<std::string, std::string>()> run;
};

// Executes cases on a worker pool; report order and values are independent of
// the thread count. Engine errors become status "error" records.
std::vector<VerificationReport> execute_cases(std::vector<SuiteCase> cases, int threads);

std::vector<SuiteCase> build_suite(const std::string& name, const SuiteOptions& opt);
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt);

const std::vector<std::string>& suite_names();  // without "all"

}  // namespace qsp
