#include "qsp/scalarprod.hpp"

#include <map>
#include <string>

namespace qsp {

ExactScalar scalar_sum(const BetheConfig& cfg) {
  const int a = static_cast<int>(cfg.uC.size());
  const int b = static_cast<int>(cfg.vC.size());
  if (static_cast<int>(cfg.uB.size()) != a || static_cast<int>(cfg.vB.size()) != b)
    throw input_error("scalar_sum: C and B cardinalities must match");
  const auto& ctx = cfg.ctx;
  ExactScalar tot(0);
  for (int k = 0; k <= a; ++k) {
    const int su[] = {k, a - k};
    auto puC = enum_partitions(a, su);
    auto puB = enum_partitions(a, su);
    for (int n = 0; n <= b; ++n) {
      const int sv[] = {n, b - n};
      auto pvC = enum_partitions(b, sv);
      auto pvB = enum_partitions(b, sv);
      for (const auto& bc : puC) {
        VarSet<ExactScalar> uCI = subset(cfg.uC, bc[0]), uCII = subset(cfg.uC, bc[1]);
        for (const auto& bb : puB) {
          VarSet<ExactScalar> uBI = subset(cfg.uB, bb[0]), uBII = subset(cfg.uB, bb[1]);
          for (const auto& vc : pvC) {
            VarSet<ExactScalar> vCI = subset(cfg.vC, vc[0]), vCII = subset(cfg.vC, vc[1]);
            for (const auto& vb : pvB) {
              VarSet<ExactScalar> vBI = subset(cfg.vB, vb[0]), vBII = subset(cfg.vB, vb[1]);
              ExactScalar term = kfun_prod(Kern::f, uBII, uBI, ctx) *
                                 kfun_prod(Kern::f, uCI, uCII, ctx) *
                                 kfun_prod(Kern::f, vBI, vBII, ctx) *
                                 kfun_prod(Kern::f, vCII, vCI, ctx) *
                                 kfun_prod(Kern::f, vCI, uCI, ctx) *
                                 kfun_prod(Kern::f, vBII, uBII, ctx);
              term *= cfg.r1.prod(uCII) * cfg.r1.prod(uBI) * cfg.r3.prod(vCII) * cfg.r3.prod(vBI);
              term *= highest_coeff(Branch::L, uCII, uBII, vCI, vBI, 1, ctx);
              term *= highest_coeff(Branch::R, uBI, uCI, vBII, vCII, 2, ctx);
              tot += term;
            }
          }
        }
      }
    }
  }
  return tot / (kfun_prod(Kern::f, cfg.vC, cfg.uC, ctx) * kfun_prod(Kern::f, cfg.vB, cfg.uB, ctx));
}

ExactScalar scalar_intermediate(const BetheConfig& cfg) {
  const int a = static_cast<int>(cfg.uC.size());
  const int b = static_cast<int>(cfg.vC.size());
  if (static_cast<int>(cfg.uB.size()) != a || static_cast<int>(cfg.vB.size()) != b)
    throw input_error("scalar_intermediate: C and B cardinalities must match");
  if (!is_onshell(cfg)) throw contract_error("scalar_intermediate: configuration is off-shell");
  const auto& ctx = cfg.ctx;
  ExactScalar tot(0);
  const int nmax = std::min(a, b);
  for (int nI = 0; nI <= nmax; ++nI) {
    const int su[] = {nI, a - nI};
    const int sv[] = {nI, b - nI};
    auto puB = enum_partitions(a, su);
    auto pvC = enum_partitions(b, sv);
    for (const auto& bu : puB) {
      VarSet<ExactScalar> uBI = subset(cfg.uB, bu[0]), uBII = subset(cfg.uB, bu[1]);
      for (const auto& bv : pvC) {
        VarSet<ExactScalar> vCI = subset(cfg.vC, bv[0]), vCII = subset(cfg.vC, bv[1]);
        VarSet<ExactScalar> gammaL = concat(uBII, vCI);
        std::vector<bool> flagsL(uBII.size(), false);
        flagsL.insert(flagsL.end(), vCI.size(), true);
        VarSet<ExactScalar> gammaM = concat(uBI, vCII);
        std::vector<bool> flagsM(uBI.size(), false);
        flagsM.insert(flagsM.end(), vCII.size(), true);
        ExactScalar term = kfun_prod(Kern::f, vCII, uBII, ctx) *
                           kfun_prod(Kern::f, uBI, uBII, ctx) *
                           kfun_prod(Kern::f, vCII, vCI, ctx);
        term *= pprod(cfg.vB) * pprod(uBII) * pprod(vCI);
        term *= g_kappa_sum(uBI, vCI, cfg.kappa, ctx);
        term *= l_det(cfg, gammaL, flagsL) * m_det(cfg, gammaM, flagsM);
        tot += term;
      }
    }
  }
  return tot;
}

EntryLimitResult entry_limit_check(const VarSet<ExactScalar>& uC, const VarSet<ExactScalar>& vC,
                                   const VarSet<ExactScalar>& uB, const VarSet<ExactScalar>& vB,
                                   EntryPair pair, const Twist& kappa, const ExactScalar& rprime,
                                   const QContext<ExactScalar>& ctx) {
  if (pair == EntryPair::U && (uC.empty() || uB.empty()))
    throw input_error("entry_limit_check: u pair needs nonempty u sets");
  if (pair == EntryPair::V && (vC.empty() || vB.empty()))
    throw input_error("entry_limit_check: v pair needs nonempty v sets");

  auto lift = [](const VarSet<ExactScalar>& s) {
    VarSet<RatFun> r;
    r.reserve(s.size());
    for (const auto& x : s) r.emplace_back(x);
    return r;
  };
  RatFun eps = RatFun::variable();
  QContext<RatFun> rctx{RatFun(ctx.q)};
  TwistT<RatFun> rkappa{RatFun(kappa.k1), RatFun(kappa.k2), RatFun(kappa.k3)};

  if (pair == EntryPair::U) {
    // designated pair: last u index; the column (uB) parameter moves,
    // uB_a = u0 + eps with u0 = uC_a.
    const std::size_t j = uC.size() - 1;
    if (!(uB.back() == uC.back()))
      throw input_error("entry_limit_check: designated u pair must coincide");
    const ExactScalar u0 = uC.back();
    // residue-vanishing r1 value at the coincidence: the twisted Bethe rhs
    ExactScalar r0 = r1_bethe_rhs(j, uC, vC, kappa.k1, kappa.k2, ctx);

    BetheConfigT<RatFun> rcfg(lift(uC), lift(vC), lift(uB), lift(vB), rkappa, rctx);
    RatFun moving = RatFun(u0) + eps;
    rcfg.uB.back() = moving;
    rcfg.r1.set(moving, RatFun(r0) + eps * RatFun(rprime));
    auto spec = make_nmatrix_spec(rcfg, DetWhich::S1);
    RatFun entry = n_entry_u(spec, j, uB.size() - 1);
    ExactScalar limit = ratfun_limit(entry, ExactScalar(0));

    BetheConfig ncfg(uC, vC, uB, vB, kappa, ctx);
    ncfg.r1.set(u0, r0, rprime);
    auto nspec = make_nmatrix_spec(ncfg, DetWhich::S1);
    ExactScalar closed = n_entry_u_diag(nspec, j, uB.size() - 1);
    return {limit, closed};
  }

  // v pair: the column (vC) parameter moves, vC_b = v0 + eps with v0 = vB_b.
  const std::size_t j = vB.size() - 1;
  if (!(vC.back() == vB.back()))
    throw input_error("entry_limit_check: designated v pair must coincide");
  const ExactScalar v0 = vB.back();
  // residue-vanishing r3 value: the ordinary (B-side) Bethe rhs
  ExactScalar r0 = r3_bethe_rhs(j, vB, uB, ExactScalar(1), ExactScalar(1), ctx);

  BetheConfigT<RatFun> rcfg(lift(uC), lift(vC), lift(uB), lift(vB), rkappa, rctx);
  RatFun moving = RatFun(v0) + eps;
  rcfg.vC.back() = moving;
  rcfg.r3.set(moving, RatFun(r0) + eps * RatFun(rprime));
  auto spec = make_nmatrix_spec(rcfg, DetWhich::S1);
  RatFun entry = n_entry_v(spec, j, rcfg.uB.size() + rcfg.vC.size() - 1);
  ExactScalar limit = ratfun_limit(entry, ExactScalar(0));

  BetheConfig ncfg(uC, vC, uB, vB, kappa, ctx);
  ncfg.r3.set(v0, r0, rprime);
  auto nspec = make_nmatrix_spec(ncfg, DetWhich::S1);
  ExactScalar closed = n_entry_v_diag(nspec, j, uB.size() + vC.size() - 1);
  return {limit, closed};
}

namespace {

// GL(3)-invariant scalar-product determinant evaluated directly from the
// invariant kernels at the slope parameters; independent of the q-deformed
// code path.
class InvariantDet {
 public:
  InvariantDet(VarSet<ExactScalar> uC, VarSet<ExactScalar> vC, VarSet<ExactScalar> uB,
               VarSet<ExactScalar> vB, ExactScalar c, ExactScalar k2)
      : uC_(std::move(uC)), vC_(std::move(vC)), uB_(std::move(uB)), vB_(std::move(vB)),
        c_(std::move(c)), k2_(std::move(k2)) {
    for (std::size_t j = 0; j < uC_.size(); ++j) r1_[key(uC_[j])] = r1_rhs(j, uC_, vC_, k2_);
    for (std::size_t j = 0; j < uB_.size(); ++j) r1_[key(uB_[j])] = r1_rhs(j, uB_, vB_, 1);
    for (std::size_t j = 0; j < vC_.size(); ++j) r3_[key(vC_[j])] = r3_rhs(j, vC_, uC_, k2_);
    for (std::size_t j = 0; j < vB_.size(); ++j) r3_[key(vB_[j])] = r3_rhs(j, vB_, uB_, 1);
  }

  ExactScalar value() const {
    const std::size_t a = uC_.size(), b = vC_.size();
    const std::size_t n = a + b;
    VarSet<ExactScalar> xbar = uB_;
    xbar.insert(xbar.end(), vC_.begin(), vC_.end());
    std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n, ExactScalar(0)));
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < n; ++k) m[j][k] = nu(j, xbar[k], k >= a);
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < n; ++k) m[a + j][k] = nv(j, xbar[k], k >= a);
    ExactScalar pref = ch() * dprime(uC_) * dprime(vB_) * dplain(xbar);
    return pref * det_field(m);
  }

 private:
  static std::string key(const ExactScalar& x) { return x.str(); }
  ExactScalar kf(Kern k, const ExactScalar& x, const ExactScalar& y) const {
    return kfun_invariant(k, x, y, c_);
  }
  ExactScalar prod1(Kern k, const ExactScalar& x, const VarSet<ExactScalar>& Y) const {
    ExactScalar acc(1);
    for (const auto& y : Y) acc *= kf(k, x, y);
    return acc;
  }
  ExactScalar prod2(Kern k, const VarSet<ExactScalar>& X, const ExactScalar& y) const {
    ExactScalar acc(1);
    for (const auto& x : X) acc *= kf(k, x, y);
    return acc;
  }
  ExactScalar prod(Kern k, const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y) const {
    ExactScalar acc(1);
    for (const auto& x : X) acc *= prod1(k, x, Y);
    return acc;
  }
  ExactScalar r1_rhs(std::size_t j, const VarSet<ExactScalar>& u, const VarSet<ExactScalar>& v,
                     const ExactScalar& k2) const {
    VarSet<ExactScalar> rest = erase_at(u, j);
    return k2 * prod1(Kern::f, u[j], rest) / prod2(Kern::f, rest, u[j]) * prod2(Kern::f, v, u[j]);
  }
  ExactScalar r3_rhs(std::size_t j, const VarSet<ExactScalar>& v, const VarSet<ExactScalar>& u,
                     const ExactScalar& k2) const {
    VarSet<ExactScalar> rest = erase_at(v, j);
    return k2 * prod2(Kern::f, rest, v[j]) / prod1(Kern::f, v[j], rest) * prod1(Kern::f, v[j], u);
  }
  ExactScalar ch() const {
    return prod(Kern::h, vC_, vC_) * prod(Kern::h, vC_, uB_) * prod(Kern::h, uB_, uB_);
  }
  ExactScalar dplain(const VarSet<ExactScalar>& w) const {
    ExactScalar acc(1);
    for (std::size_t j = 0; j < w.size(); ++j)
      for (std::size_t k = 0; k < j; ++k) acc *= kf(Kern::g, w[j], w[k]);
    return acc;
  }
  ExactScalar dprime(const VarSet<ExactScalar>& w) const {
    ExactScalar acc(1);
    for (std::size_t j = 0; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k) acc *= kf(Kern::g, w[j], w[k]);
    return acc;
  }
  ExactScalar nu(std::size_t j, const ExactScalar& x, bool in_vC) const {
    ExactScalar second = k2_ * kf(Kern::t, x, uC_[j]) * prod1(Kern::h, x, uC_) /
                         prod1(Kern::h, x, uB_);
    if (in_vC) return second;
    ExactScalar sign = uC_.size() % 2 == 1 ? ExactScalar(1) : ExactScalar(-1);
    ExactScalar first = sign * kf(Kern::t, uC_[j], x) * r1_.at(key(x)) /
                        prod2(Kern::f, vC_, x) * prod2(Kern::h, uC_, x) /
                        prod1(Kern::h, x, uB_);
    return first + second;
  }
  ExactScalar nv(std::size_t j, const ExactScalar& x, bool in_vC) const {
    ExactScalar second = kf(Kern::t, vB_[j], x) * prod2(Kern::h, vB_, x) / prod2(Kern::h, vC_, x);
    if (!in_vC) return second;
    ExactScalar sign = vB_.size() % 2 == 1 ? ExactScalar(1) : ExactScalar(-1);
    ExactScalar first = sign * kf(Kern::t, x, vB_[j]) * r3_.at(key(x)) /
                        prod1(Kern::f, x, uB_) * prod1(Kern::h, x, vB_) /
                        prod2(Kern::h, vC_, x);
    return first + second;
  }

  VarSet<ExactScalar> uC_, vC_, uB_, vB_;
  ExactScalar c_, k2_;
  std::map<std::string, ExactScalar> r1_, r3_;
};

}  // namespace

ScalingLimits scaling_limit_scalar(const VarSet<ExactScalar>& uCp, const VarSet<ExactScalar>& vCp,
                                   const VarSet<ExactScalar>& uBp, const VarSet<ExactScalar>& vBp,
                                   const ExactScalar& c, const ExactScalar& k2) {
  RatFun eps = RatFun::variable();
  auto lift = [&](const VarSet<ExactScalar>& slopes) {
    VarSet<RatFun> r;
    r.reserve(slopes.size());
    for (const auto& p : slopes) r.push_back(RatFun(1) + eps * RatFun(p));
    return r;
  };
  RatFun q = RatFun(1) + eps * RatFun(c / ExactScalar(2));
  QContext<RatFun> rctx(q);

  TwistT<RatFun> kap1{RatFun(1), RatFun(k2), RatFun(1)};
  auto cfg1 = make_onshell_config(lift(uCp), lift(vCp), lift(uBp), lift(vBp), kap1, rctx);
  ExactScalar s1 = ratfun_limit(scalar_det(cfg1, DetWhich::S1), ExactScalar(0));

  TwistT<RatFun> kapq{RatFun(1), RatFun(k2), rctx.q2()};
  auto cfgq = make_onshell_config(lift(uCp), lift(vCp), lift(uBp), lift(vBp), kapq, rctx);
  ExactScalar sq2 = ratfun_limit(scalar_det(cfgq, DetWhich::Sq2), ExactScalar(0));

  InvariantDet inv(uCp, vCp, uBp, vBp, c, k2);
  return {s1, sq2, inv.value()};
}

}  // namespace qsp
