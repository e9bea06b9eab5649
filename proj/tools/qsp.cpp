// Command-line driver: randomized verification suites, direct evaluation of
// the scalar-product routes and form factors, and exact scaling/diagonal
// limit checks. Reports are JSON lines with rationals as "p/q" text.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsp/formfactor.hpp"
#include "qsp/identities.hpp"
#include "qsp/report.hpp"
#include "qsp/sampler.hpp"
#include "qsp/scalarprod.hpp"
#include "qsp/suites.hpp"

namespace {

using namespace qsp;

VarSet<ExactScalar> parse_set(const std::vector<std::string>& texts) {
  VarSet<ExactScalar> s;
  s.reserve(texts.size());
  for (const auto& t : texts) s.push_back(scalar_parse(t));
  return s;
}

Twist parse_twist(const RunConfig& rc) {
  return Twist{scalar_parse(rc.kappa1), scalar_parse(rc.kappa2), scalar_parse(rc.kappa3)};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

BetheConfig config_from_run(const RunConfig& rc) {
  QContext<ExactScalar> ctx(scalar_parse(rc.q));
  std::optional<ExactScalar> z, r1z, r3z;
  if (rc.z) z = scalar_parse(*rc.z);
  if (rc.r1_at_z) r1z = scalar_parse(*rc.r1_at_z);
  if (rc.r3_at_z) r3z = scalar_parse(*rc.r3_at_z);
  auto cfg = make_onshell_config(parse_set(rc.uC), parse_set(rc.vC), parse_set(rc.uB),
                                 parse_set(rc.vB), parse_twist(rc), ctx, z, r1z, r3z);
  // optional derivative data for coinciding points (norm-type evaluations)
  for (std::size_t i = 0; i < rc.rprime1.size() && i < cfg.uC.size(); ++i)
    cfg.r1.set(cfg.uC[i], cfg.r1.r_at(cfg.uC[i]), scalar_parse(rc.rprime1[i]));
  for (std::size_t i = 0; i < rc.rprime3.size() && i < cfg.vC.size(); ++i)
    cfg.r3.set(cfg.vC[i], cfg.r3.r_at(cfg.vC[i]), scalar_parse(rc.rprime3[i]));
  return cfg;
}

int cmd_verify(const RunConfig& rc, const std::string& suite, const std::string& report_path) {
  SuiteOptions opt;
  opt.seed = rc.seed;
  opt.trials = rc.trials;
  opt.max_a = rc.max_a;
  opt.max_b = rc.max_b;
  opt.q = scalar_parse(rc.q);
  opt.kappa2 = scalar_parse(rc.kappa2);
  opt.bound = rc.bound;
  opt.threads = rc.threads;
  auto reports = run_suite(suite, opt);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!report_path.empty()) {
    file.open(report_path);
    if (!file) {
      std::cerr << "cannot open report file " << report_path << "\n";
      return 2;
    }
    out = &file;
  }
  int pass = 0, fail = 0, err = 0;
  for (const auto& r : reports) {
    *out << report_to_json(r) << "\n";
    if (r.status == "pass") ++pass;
    else if (r.status == "fail") ++fail;
    else ++err;
  }
  std::cerr << "suite " << suite << ": " << reports.size() << " cases, " << pass << " pass, "
            << fail << " fail, " << err << " error\n";
  return fail + err == 0 ? 0 : 1;
}

int cmd_eval(const RunConfig& rc, const std::string& what, const std::string& methods) {
  try {
    BetheConfig cfg = config_from_run(rc);
    std::vector<std::pair<std::string, ExactScalar>> values;
    for (const std::string& m : split_csv(methods)) {
      if (what == "scalar") {
        if (m == "sum") values.emplace_back(m, scalar_sum(cfg));
        else if (m == "intermediate") values.emplace_back(m, scalar_intermediate(cfg));
        else if (m == "det1") values.emplace_back(m, scalar_det(cfg, DetWhich::S1));
        else if (m == "detq2") values.emplace_back(m, scalar_det(cfg, DetWhich::Sq2));
        else throw input_error("unknown scalar method: " + m);
      } else if (what == "formfactor") {
        if (!cfg.z) throw input_error("form factors need z (and r1_at_z, r3_at_z) in the config");
        if (m == "ff22") {
          values.emplace_back(m, ff22(cfg.uC, cfg.vC, cfg.uB, cfg.vB, *cfg.z,
                                      cfg.r1.r_at(*cfg.z), cfg.r3.r_at(*cfg.z), cfg.ctx,
                                      FF22Route::Interpolation));
        } else if (m == "ff33q2") {
          FormFactorRequest req{FFWhich::FF33_q2, *cfg.z, cfg};
          values.emplace_back(m, twisted_ff(req, FFRoute::Det));
        } else if (m == "ff12q") {
          values.emplace_back(m, ff12_twisted(*cfg.z, cfg));
        } else {
          throw input_error("unknown formfactor method: " + m);
        }
      } else {
        throw input_error("eval: --what must be scalar or formfactor");
      }
    }
    bool all_equal = true;
    for (const auto& [name, v] : values) {
      std::cout << name << " " << v.str() << "\n";
      if (!(v == values.front().second)) all_equal = false;
    }
    if (values.size() > 1) std::cout << (all_equal ? "equal" : "distinct") << "\n";
    return all_equal ? 0 : 1;
  } catch (const error& e) {
    std::cerr << "eval error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_limit(const RunConfig& rc, const std::string& kind) {
  try {
    QContext<ExactScalar> ctx(scalar_parse(rc.q));
    const ExactScalar c = scalar_parse(rc.c);
    bool all_ok = true;
    if (kind == "q1-kernels") {
      RatSampler smp(rc.seed, rc.bound, ctx);
      for (int i = 0; i < 20; ++i) {
        smp.reset_pool();
        // reuse the pool guard, then keep only pairs clear of invariant poles
        ExactScalar xp = smp.draw(), yp = smp.draw();
        ExactScalar d = xp - yp;
        if (d.is_zero() || d == c || d == -c) {
          --i;
          continue;
        }
        for (Kern k : {Kern::f, Kern::g, Kern::h, Kern::t}) {
          ExactScalar lim = ratfun_limit(scaling_substitute(k, xp, yp, c), ExactScalar(0));
          ExactScalar inv = kfun_invariant(k, xp, yp, c);
          bool ok = lim == inv;
          all_ok = all_ok && ok;
          std::cout << "q1-kernel " << kern_name(k) << " x'=" << xp.str() << " y'=" << yp.str()
                    << " limit=" << lim.str() << " invariant=" << inv.str() << " "
                    << (ok ? "equal" : "DISTINCT") << "\n";
        }
      }
    } else if (kind == "q1-scalar") {
      auto lim = scaling_limit_scalar(parse_set(rc.uC), parse_set(rc.vC), parse_set(rc.uB),
                                      parse_set(rc.vB), c, scalar_parse(rc.kappa2));
      bool ok = lim.s1 == lim.sq2 && lim.s1 == lim.invariant;
      all_ok = ok;
      std::cout << "limit_S1 " << lim.s1.str() << "\nlimit_Sq2 " << lim.sq2.str()
                << "\ninvariant " << lim.invariant.str() << "\n"
                << (ok ? "equal" : "DISTINCT") << "\n";
    } else if (kind == "diag-entry") {
      auto uC = parse_set(rc.uC), vC = parse_set(rc.vC), uB = parse_set(rc.uB),
           vB = parse_set(rc.vB);
      EntryPair pair;
      ExactScalar rp;
      if (!uC.empty() && !uB.empty() && uC.back() == uB.back()) {
        pair = EntryPair::U;
        if (rc.rprime1.empty()) throw input_error("diag-entry: rprime1 value required");
        rp = scalar_parse(rc.rprime1.front());
      } else if (!vC.empty() && !vB.empty() && vC.back() == vB.back()) {
        pair = EntryPair::V;
        if (rc.rprime3.empty()) throw input_error("diag-entry: rprime3 value required");
        rp = scalar_parse(rc.rprime3.front());
      } else {
        throw input_error("diag-entry: last uC/uB (or vC/vB) entries must coincide");
      }
      auto r = entry_limit_check(uC, vC, uB, vB, pair, parse_twist(rc), rp, ctx);
      bool ok = r.limit == r.closed;
      all_ok = ok;
      std::cout << "generic-limit " << r.limit.str() << "\ndiagonal-formula " << r.closed.str()
                << "\n" << (ok ? "equal" : "DISTINCT") << "\n";
    } else {
      throw input_error("unknown limit kind: " + kind);
    }
    return all_ok ? 0 : 1;
  } catch (const error& e) {
    std::cerr << "limit error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scalar products and form factors of GL(3) trigonometric Bethe vectors"};
  app.require_subcommand(1);

  std::string config_path, report_path, suite = "all", what = "scalar", method = "sum";
  std::string limit_kind = "q1-kernels", kappa_csv;
  RunConfig rc;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file with RunConfig fields");
    cmd->add_option("--q", rc.q, "deformation parameter as p/q text");
    cmd->add_option("--kappa", kappa_csv, "twist parameters k1,k2,k3");
    cmd->add_option("--seed", rc.seed, "random seed");
    cmd->add_option("--trials", rc.trials, "randomized trials per case family");
    cmd->add_option("--max-a", rc.max_a, "largest u-set cardinality");
    cmd->add_option("--max-b", rc.max_b, "largest v-set cardinality");
    cmd->add_option("--threads", rc.threads, "worker threads");
    cmd->add_option("--bound", rc.bound, "numerator/denominator bound for random rationals");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a randomized verification suite");
  add_common(verify);
  verify->add_option("--suite", suite,
                     "all|kernel|izergin|lemmas|appendix|hc|props|limits|formfactor");
  verify->add_option("--report", report_path, "write JSON-lines report to this path");

  CLI::App* eval = app.add_subcommand("eval", "evaluate scalar products / form factors");
  add_common(eval);
  eval->add_option("--what", what, "scalar|formfactor");
  eval->add_option("--method", method,
                   "comma list of sum|intermediate|det1|detq2|ff22|ff33q2|ff12q");

  CLI::App* limit = app.add_subcommand("limit", "exact scaling and diagonal-entry limits");
  add_common(limit);
  limit->add_option("--kind", limit_kind, "q1-kernels|q1-scalar|diag-entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      // file values form the base; explicitly given flags win
      RunConfig from_flags = rc;
      rc = qsp::run_config_from_file(config_path);
      for (CLI::App* cmd : {verify, eval, limit}) {
        if (!cmd->parsed()) continue;
        if (cmd->count("--q")) rc.q = from_flags.q;
        if (cmd->count("--seed")) rc.seed = from_flags.seed;
        if (cmd->count("--trials")) rc.trials = from_flags.trials;
        if (cmd->count("--max-a")) rc.max_a = from_flags.max_a;
        if (cmd->count("--max-b")) rc.max_b = from_flags.max_b;
        if (cmd->count("--threads")) rc.threads = from_flags.threads;
        if (cmd->count("--bound")) rc.bound = from_flags.bound;
      }
    }
    if (!kappa_csv.empty()) {
      auto parts = split_csv(kappa_csv);
      if (parts.size() != 3) throw qsp::input_error("--kappa needs three comma-separated values");
      rc.kappa1 = parts[0];
      rc.kappa2 = parts[1];
      rc.kappa3 = parts[2];
    }
    if (verify->parsed()) return cmd_verify(rc, suite, report_path);
    if (eval->parsed()) return cmd_eval(rc, what, method);
    if (limit->parsed()) return cmd_limit(rc, limit_kind);
  } catch (const qsp::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
