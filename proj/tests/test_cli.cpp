#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsp/suites.hpp"

using namespace qsp;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(QSP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp_normalized(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    j.erase("time_ms");
    out << j.dump() << "\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("library-level determinism: reports independent of thread count") {
  SuiteOptions opt;
  opt.seed = 7;
  opt.trials = 1;
  opt.max_a = 1;
  opt.max_b = 1;
  opt.threads = 1;
  auto r1 = run_suite("izergin", opt);
  opt.threads = 4;
  auto r2 = run_suite("izergin", opt);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    CHECK(report_normalized(r1[i]) == report_normalized(r2[i]));
  for (const auto& r : r1) CHECK(r.status == "pass");
}

TEST_CASE("cli verify runs a suite and reports determinism across reruns") {
  CHECK(run_cli("verify --suite kernel --seed 3") == 0);

  std::string rep1 = "/tmp/qsp_rep1.jsonl", rep2 = "/tmp/qsp_rep2.jsonl";
  CHECK(run_cli("verify --suite izergin --seed 7 --trials 1 --threads 1 --report " + rep1) == 0);
  CHECK(run_cli("verify --suite izergin --seed 7 --trials 1 --threads 4 --report " + rep2) == 0);
  CHECK(slurp_normalized(rep1) == slurp_normalized(rep2));
}

TEST_CASE("cli eval agrees across methods and honours contracts") {
  // on-shell a = b = 1 config via JSON file
  std::string cfg_path = "/tmp/qsp_eval_cfg.json";
  {
    std::ofstream f(cfg_path);
    f << R"({"q":"2","kappa":["1","5/3","1"],)"
      << R"("uC":["3"],"vC":["5"],"uB":["11/3"],"vB":["17/4"]})";
  }
  CHECK(run_cli("eval --what scalar --method det1,sum,intermediate --config " + cfg_path) == 0);
  // detq2 with kappa3 != q^2 must produce the contract diagnostic
  CHECK(run_cli("eval --what scalar --method detq2 --config " + cfg_path) == 2);

  // empty sets, sum method: prints "1"
  std::string empty_path = "/tmp/qsp_eval_empty.json";
  {
    std::ofstream f(empty_path);
    f << R"({"q":"2","uC":[],"vC":[],"uB":[],"vB":[]})";
  }
  CHECK(run_cli("eval --what scalar --method sum --config " + empty_path) == 0);
}

TEST_CASE("cli limit kinds") {
  CHECK(run_cli("limit --kind q1-kernels --seed 5") == 0);
  std::string cfg_path = "/tmp/qsp_limit_cfg.json";
  {
    std::ofstream f(cfg_path);
    f << R"({"q":"2","c":"2","kappa":["1","5/3","1"],)"
      << R"("uC":["1/3"],"vC":[],"uB":["3/2"],"vB":[]})";
  }
  CHECK(run_cli("limit --kind q1-scalar --config " + cfg_path) == 0);

  std::string diag_path = "/tmp/qsp_diag_cfg.json";
  {
    std::ofstream f(diag_path);
    f << R"({"q":"2","kappa":["1","1","1"],"rprime1":["11"],)"
      << R"("uC":["3"],"vC":[],"uB":["3"],"vB":[]})";
  }
  CHECK(run_cli("limit --kind diag-entry --config " + diag_path) == 0);
}
