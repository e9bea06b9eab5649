#include "qsp/report.hpp"

#include <fstream>

#include <json.hpp>

namespace qsp {

namespace {

nlohmann::json report_json(const VerificationReport& r, bool with_time) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["case"] = r.case_id;
  j["seed"] = r.seed;
  j["sizes"] = r.sizes;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["status"] = r.status;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_time) j["time_ms"] = r.time_ms;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return report_json(r, true).dump(); }

std::string report_normalized(const VerificationReport& r) {
  return report_json(r, false).dump();
}

RunConfig run_config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  RunConfig c;
  auto get_str = [&](const char* key, std::string& dst) {
    if (j.contains(key)) dst = j[key].get<std::string>();
  };
  auto get_arr = [&](const char* key, std::vector<std::string>& dst) {
    if (j.contains(key)) dst = j[key].get<std::vector<std::string>>();
  };
  get_str("q", c.q);
  if (j.contains("kappa")) {
    auto k = j["kappa"].get<std::vector<std::string>>();
    if (k.size() != 3) throw input_error("config: kappa must have three components");
    c.kappa1 = k[0];
    c.kappa2 = k[1];
    c.kappa3 = k[2];
  }
  get_arr("uC", c.uC);
  get_arr("vC", c.vC);
  get_arr("uB", c.uB);
  get_arr("vB", c.vB);
  get_arr("rprime1", c.rprime1);
  get_arr("rprime3", c.rprime3);
  if (j.contains("z")) c.z = j["z"].get<std::string>();
  if (j.contains("r1_at_z")) c.r1_at_z = j["r1_at_z"].get<std::string>();
  if (j.contains("r3_at_z")) c.r3_at_z = j["r3_at_z"].get<std::string>();
  get_str("c", c.c);
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) c.trials = j["trials"].get<int>();
  if (j.contains("max_a")) c.max_a = j["max_a"].get<int>();
  if (j.contains("max_b")) c.max_b = j["max_b"].get<int>();
  if (j.contains("threads")) c.threads = j["threads"].get<int>();
  if (j.contains("bound")) c.bound = j["bound"].get<long>();
  return c;
}

}  // namespace qsp
