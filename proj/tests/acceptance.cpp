// Acceptance suite: every criterion is an exact-identity or oracle-equivalence
// family run over seeded random guarded configurations; a criterion passes iff
// every case passes with exact rational equality (zero tolerance).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qsp/suites.hpp"

using namespace qsp;

namespace {

struct CriterionResult {
  int number;
  std::string title;
  bool pass;
  std::size_t cases;
  long ms;
  std::string detail;
};

int g_threads = 1;

bool all_pass(const std::vector<VerificationReport>& reports, std::string& detail,
              std::size_t& count, long& ms, const std::string& prefix = "") {
  bool ok = true;
  count = 0;
  ms = 0;
  for (const auto& r : reports) {
    if (!prefix.empty() && r.case_id.rfind(prefix, 0) != 0) continue;
    ++count;
    ms += r.time_ms;
    if (r.status != "pass" && ok) {
      ok = false;
      detail = r.case_id + ": " + r.status +
               (r.detail.empty() ? " lhs=" + r.lhs + " rhs=" + r.rhs : " " + r.detail);
    }
  }
  if (count == 0) {
    ok = false;
    detail = "no cases matched";
  }
  return ok;
}

SuiteOptions base_options() {
  SuiteOptions opt;
  opt.seed = 2026;
  opt.trials = 5;
  opt.max_a = 3;
  opt.max_b = 3;
  opt.q = ExactScalar(2);
  opt.kappa2 = ExactScalar(5, 3);
  opt.bound = 40;
  opt.threads = g_threads;
  return opt;
}

CriterionResult from_reports(int number, std::string title,
                             const std::vector<VerificationReport>& reports,
                             const std::string& prefix = "") {
  CriterionResult c{number, std::move(title), false, 0, 0, ""};
  c.pass = all_pass(reports, c.detail, c.cases, c.ms, prefix);
  return c;
}

CriterionResult criterion13() {
  auto start = std::chrono::steady_clock::now();
  SuiteOptions opt = base_options();
  opt.trials = 1;
  opt.max_a = 1;
  opt.max_b = 1;
  opt.threads = 1;
  auto r1 = run_suite("all", opt);
  opt.threads = 4;
  auto r2 = run_suite("all", opt);
  opt.threads = 4;
  auto r3 = run_suite("all", opt);
  CriterionResult c{13, "determinism: identical reports for any thread count", true, r1.size(),
                    0, ""};
  if (r1.size() != r2.size() || r2.size() != r3.size()) {
    c.pass = false;
    c.detail = "report sizes differ";
  } else {
    for (std::size_t i = 0; i < r1.size(); ++i) {
      if (report_normalized(r1[i]) != report_normalized(r2[i]) ||
          report_normalized(r2[i]) != report_normalized(r3[i])) {
        c.pass = false;
        c.detail = "record " + std::to_string(i) + " differs across reruns";
        break;
      }
      if (r1[i].status != "pass") {
        c.pass = false;
        c.detail = r1[i].case_id + ": " + r1[i].status;
        break;
      }
    }
  }
  c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
             .count();
  return c;
}

}  // namespace

int main() {
  unsigned hw = std::thread::hardware_concurrency();
  g_threads = hw == 0 ? 2 : static_cast<int>(hw > 8 ? 8 : hw);

  std::vector<CriterionResult> results;
  SuiteOptions opt = base_options();

  auto kernel = run_suite("kernel", opt);
  results.push_back(from_reports(
      1, "kernel relations: all shift identities and h=f/g, t=g/h at 50 points, q in {2, 3/2}",
      kernel));

  auto izergin_reports = run_suite("izergin", opt);
  results.push_back(from_reports(
      2, "Izergin properties: reduction (n,m<=3), inversion (n<=4), residue (n<=3), block "
         "identity (m<=4), symmetry",
      izergin_reports));

  auto lemmas = run_suite("lemmas", opt);
  {
    CriterionResult c{3,
                      "summation lemmas: lemma 1 (m1+m2<=5), lemma 2 (m<=4), lemma 3 and all "
                      "five corollaries (n<=4), both branches",
                      false, 0, 0, ""};
    std::string d;
    std::size_t n1, n2, n3, n4;
    long m1, m2, m3, m4;
    bool ok = all_pass(lemmas, d, n1, m1, "lemma");
    ok = all_pass(lemmas, d, n2, m2, "cor") && ok;
    ok = all_pass(lemmas, d, n3, m3, "trivrav") && ok;
    c.pass = ok;
    c.detail = d;
    c.cases = n1 + n2 + n3;
    c.ms = m1 + m2 + m3;
    (void)n4;
    (void)m4;
    results.push_back(c);
  }

  auto appendix = run_suite("appendix", opt);
  results.push_back(from_reports(
      4, "factorized sum: Lambda_l = Lambda_r (n<=4) and all four residue recursions (n<=3)",
      appendix));

  auto hc = run_suite("hc", opt);
  results.push_back(from_reports(
      5, "highest coefficient: both partition-sum representations agree (a,b<=3, both branches)",
      hc));

  auto props = run_suite("props", opt);
  results.push_back(from_reports(
      6, "Proposition 1: sum = intermediate = determinant at kappa3/kappa1 = 1 over the size "
         "grid, kappa2 in {1, 5/3}",
      props, "prop1"));
  results.push_back(from_reports(
      7, "Proposition 2: sum = intermediate = determinant at kappa3/kappa1 = q^2 over the size "
         "grid, kappa2 in {1, 5/3}",
      props, "prop2"));
  results.push_back(from_reports(
      8, "G^(kappa) closed forms at the two special twist ratios (n<=3)", props, "gkappa"));

  {
    CriterionResult c{9, "block determinant expansion (a,b<=3) and permutation sign parity "
                         "(sets up to size 6)",
                      false, 0, 0, ""};
    std::string d;
    std::size_t n1, n2;
    long m1, m2;
    bool ok = all_pass(lemmas, d, n1, m1, "genmat");
    ok = all_pass(lemmas, d, n2, m2, "permsign") && ok;
    c.pass = ok;
    c.detail = d;
    c.cases = n1 + n2;
    c.ms = m1 + m2;
    results.push_back(c);
  }

  auto limits = run_suite("limits", opt);
  results.push_back(from_reports(
      10, "diagonal entries: generic-entry limits equal the closed formulas for the u and v "
          "pairs",
      limits, "diag-"));
  results.push_back(from_reports(
      11, "scaling limit: kernels at 20 points and full S1/Sq2 limits at (1,0),(0,1),(1,1)",
      limits, "q1-"));

  auto ff = run_suite("formfactor", opt);
  results.push_back(from_reports(
      12, "form factors: twisted det = sum routes (a,b<=2), F22 interpolation = row derivative, "
          "F12 symmetry and vacuum values",
      ff));

  results.push_back(criterion13());

  int failures = 0;
  for (const auto& c : results) {
    std::printf("[%s] criterion %2d: %s (%zu cases, %ld ms)%s%s\n", c.pass ? "PASS" : "FAIL",
                c.number, c.title.c_str(), c.cases, c.ms, c.pass ? "" : " -- ",
                c.pass ? "" : c.detail.c_str());
    if (!c.pass) ++failures;
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, results.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", results.size());
  return 0;
}
