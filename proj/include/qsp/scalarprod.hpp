#pragma once

#include <utility>
#include <vector>

#include "qsp/bethe.hpp"
#include "qsp/partitions.hpp"

namespace qsp {

// ---------------------------------------------------------------------------
// Highest coefficients Z_{a,b}(t;x|s;y), two equivalent partition-sum
// representations, each valid per branch.
// ---------------------------------------------------------------------------
template <class F>
F highest_coeff(Branch br, const VarSet<F>& tb, const VarSet<F>& xb, const VarSet<F>& sb,
                const VarSet<F>& yb, int rep, const QContext<F>& ctx) {
  const int a = static_cast<int>(tb.size());
  const int b = static_cast<int>(sb.size());
  if (static_cast<int>(xb.size()) != a || static_cast<int>(yb.size()) != b)
    throw input_error("highest_coeff: cardinality mismatch");
  F tot(0);
  if (rep == 1) {
    VarSet<F> w = concat(xb, sb);
    const int sizes[] = {b, a};
    for_each_partition(a + b, sizes, [&](const Blocks& blk) {
      VarSet<F> wI = subset(w, blk[0]);
      VarSet<F> wII = subset(w, blk[1]);
      tot += kz(sb, scale_set(wI, ctx.q2()), variant_opposite(br), ctx) *
             kz(wII, tb, variant_same(br), ctx) * kz(yb, wI, variant_same(br), ctx) *
             kfun_prod(Kern::f, wI, wII, ctx);
    });
    return pow_int(F(0) - ctx.q, branch_sign(br) * static_cast<long>(b)) * tot;
  }
  if (rep != 2) throw input_error("highest_coeff: rep must be 1 or 2");
  VarSet<F> eta = concat(yb, scale_set(tb, ctx.qm2()));
  const int sizes[] = {a, b};
  for_each_partition(a + b, sizes, [&](const Blocks& blk) {
    VarSet<F> etaI = subset(eta, blk[0]);
    VarSet<F> etaII = subset(eta, blk[1]);
    tot += kz(scale_set(tb, ctx.qm2()), scale_set(etaI, ctx.q2()), variant_opposite(br), ctx) *
           kz(scale_set(xb, ctx.qm2()), etaI, variant_same(br), ctx) *
           kz(etaII, sb, variant_same(br), ctx) * kfun_prod(Kern::f, etaI, etaII, ctx);
  });
  return pow_int(F(0) - ctx.q, branch_sign(br) * static_cast<long>(a)) *
         kfun_prod(Kern::f, yb, xb, ctx) * kfun_prod(Kern::f, sb, tb, ctx) * tot;
}

// ---------------------------------------------------------------------------
// Determinant representations: the combined column set x = {uB, (z,) vC} and
// the two matrix row families.
// ---------------------------------------------------------------------------
enum class DetWhich { S1, Sq2, F12 };

template <class F>
struct NMatrixSpecT {
  struct Col {
    F x;
    bool in_vC;  // column point belongs to vC
    bool is_z;   // column is the inserted spectral point
  };
  const BetheConfigT<F>* cfg;
  DetWhich which;
  std::vector<Col> cols;
};

template <class F>
NMatrixSpecT<F> make_nmatrix_spec(const BetheConfigT<F>& cfg, DetWhich which) {
  NMatrixSpecT<F> spec{&cfg, which, {}};
  for (const F& x : cfg.uB) spec.cols.push_back({x, false, false});
  if (which == DetWhich::F12) {
    if (!cfg.z) throw input_error("nmatrix: F12 requires a spectral point z in the configuration");
    spec.cols.push_back({*cfg.z, false, true});
  }
  for (const F& x : cfg.vC) spec.cols.push_back({x, true, false});
  return spec;
}

// Coefficient of kappa2/kappa1 in the u-row entry (its second term).
template <class F>
F n_entry_u_term2_coeff(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const F& x = spec.cols[k].x;
  return kfun(Kern::t, x, cfg.uC[j], cfg.ctx) * kfun_prod1(Kern::h, x, cfg.uC, cfg.ctx) /
         kfun_prod1(Kern::h, x, cfg.uB, cfg.ctx);
}

// Diagonal u-entry at a coinciding pair uC_j = uB-column value u0; the finite
// limit of the generic entry, requiring r1 and r1' at u0.
template <class F>
F n_entry_u_diag(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const auto& ctx = cfg.ctx;
  const F& u0 = spec.cols[k].x;
  const F& r = cfg.r1.r_at(u0);
  const F& rp = cfg.r1.rp_at(u0);
  F numer(1);
  F denom = u0;
  for (std::size_t l = 0; l < cfg.uC.size(); ++l)
    if (l != j) numer *= kfun(Kern::h, u0, cfg.uC[l], ctx);
  for (std::size_t mth = 0; mth < cfg.uB.size(); ++mth)
    if (!(cfg.uB[mth] == u0)) denom *= kfun(Kern::h, u0, cfg.uB[mth], ctx);
  F bracket = (ctx.qinv - ctx.q) * rp / r;
  for (std::size_t l = 0; l < cfg.uC.size(); ++l)
    if (l != j)
      bracket += (ctx.q + ctx.qinv) * cfg.uC[l] /
                 (kfun(Kern::h, u0, cfg.uC[l], ctx) * kfun(Kern::h, cfg.uC[l], u0, ctx));
  for (std::size_t i = 0; i < cfg.vC.size(); ++i)
    bracket += cfg.vC[i] * kfun(Kern::t, cfg.vC[i], u0, ctx);
  return cfg.kappa.k2 / cfg.kappa.k1 * numer / denom * bracket;
}

// u-row entry. The r1-carrying term vanishes identically at vC columns
// (1/f(vC, x) has a zero there); coinciding uC/uB points take the diagonal
// form. The row sign is (-1)^{#uC - 1}, which also covers the enlarged
// C set of the T12 form factor.
template <class F>
F n_entry_u(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const auto& ctx = cfg.ctx;
  const auto& col = spec.cols[k];
  const F& uc = cfg.uC[j];
  if (!col.in_vC && col.x == uc) return n_entry_u_diag(spec, j, k);
  F second = cfg.kappa.k2 / cfg.kappa.k1 * n_entry_u_term2_coeff(spec, j, k);
  if (col.in_vC) return second;
  F sign = cfg.uC.size() % 2 == 1 ? F(1) : F(-1);
  F first = sign * kfun(Kern::t, uc, col.x, ctx) * cfg.r1.r_at(col.x) /
            kfun_prod2(Kern::f, cfg.vC, col.x, ctx) * kfun_prod2(Kern::h, cfg.uC, col.x, ctx) /
            kfun_prod1(Kern::h, col.x, cfg.uB, ctx);
  return first + second;
}

// First (r3-carrying) term of the v-row entry; identically zero at uB columns.
template <class F>
F n_entry_v_term1(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const auto& ctx = cfg.ctx;
  const auto& col = spec.cols[k];
  if (!col.in_vC && !col.is_z) return F(0);
  F sign = cfg.vB.size() % 2 == 1 ? F(1) : F(-1);
  return sign * kfun(Kern::t, col.x, cfg.vB[j], ctx) * cfg.r3.r_at(col.x) /
         kfun_prod1(Kern::f, col.x, cfg.uB, ctx) * kfun_prod1(Kern::h, col.x, cfg.vB, ctx) /
         kfun_prod2(Kern::h, cfg.vC, col.x, ctx);
}

// Diagonal v-entry at a coinciding pair vB_j = vC-column value v0.
template <class F>
F n_entry_v_diag(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const auto& ctx = cfg.ctx;
  const F& v0 = spec.cols[k].x;
  const F& r = cfg.r3.r_at(v0);
  const F& rp = cfg.r3.rp_at(v0);
  F numer(1);
  F denom = v0;
  for (std::size_t i = 0; i < cfg.vB.size(); ++i)
    if (i != j) numer *= kfun(Kern::h, cfg.vB[i], v0, ctx);
  for (std::size_t i = 0; i < cfg.vC.size(); ++i)
    if (!(cfg.vC[i] == v0)) denom *= kfun(Kern::h, cfg.vC[i], v0, ctx);
  F bracket = ctx.qd * rp / r;
  for (std::size_t i = 0; i < cfg.vB.size(); ++i)
    if (i != j)
      bracket += (ctx.q + ctx.qinv) * cfg.vB[i] /
                 (kfun(Kern::h, cfg.vB[i], v0, ctx) * kfun(Kern::h, v0, cfg.vB[i], ctx));
  for (std::size_t l = 0; l < cfg.uB.size(); ++l)
    bracket += cfg.uB[l] * kfun(Kern::t, v0, cfg.uB[l], ctx);
  return numer / denom * bracket;
}

template <class F>
F n_entry_v(const NMatrixSpecT<F>& spec, std::size_t j, std::size_t k) {
  const auto& cfg = *spec.cfg;
  const auto& ctx = cfg.ctx;
  const auto& col = spec.cols[k];
  const F& vb = cfg.vB[j];
  if (col.in_vC && col.x == vb) return n_entry_v_diag(spec, j, k);
  F second = kfun(Kern::t, vb, col.x, ctx) * kfun_prod2(Kern::h, cfg.vB, col.x, ctx) /
             kfun_prod2(Kern::h, cfg.vC, col.x, ctx);
  return n_entry_v_term1(spec, j, k) + second;
}

// Scalar prefactor common to the determinant representations.
template <class F>
F s_prefactor(const BetheConfigT<F>& cfg, DetWhich which, const std::vector<F>& xbar) {
  const auto& ctx = cfg.ctx;
  F pref = pprod(cfg.vB) * c_h(cfg.vC, cfg.uB, ctx) * delta(DeltaKind::Prime, cfg.uC, ctx) *
           delta(DeltaKind::Prime, cfg.vB, ctx) * delta(DeltaKind::Plain, xbar, ctx);
  if (which == DetWhich::S1 || which == DetWhich::F12) pref *= pprod(cfg.uB);
  if (which == DetWhich::F12)
    pref *= *cfg.z * kfun_prod2(Kern::h, cfg.vC, *cfg.z, ctx) *
            kfun_prod1(Kern::h, *cfg.z, cfg.uB, ctx);
  return pref;
}

// Determinant representation of the scalar product of a twisted on-shell and
// an ordinary on-shell vector. S1 needs kappa1 = kappa3, Sq2 needs
// kappa3 = q^2 kappa1, F12 (the T12 twisted form factor core) needs
// kappa3 = q kappa1 and #uC = #uB + 1.
template <class F>
F scalar_det(const BetheConfigT<F>& cfg, DetWhich which) {
  const auto& ctx = cfg.ctx;
  const std::size_t a = cfg.uB.size();
  const std::size_t b = cfg.vB.size();
  switch (which) {
    case DetWhich::S1:
      if (!((cfg.kappa.k1 - cfg.kappa.k3).is_zero()))
        throw contract_error("scalar_det(S1): requires kappa3 = kappa1");
      if (cfg.uC.size() != a || cfg.vC.size() != b)
        throw input_error("scalar_det(S1): cardinality mismatch");
      break;
    case DetWhich::Sq2:
      if (!((cfg.kappa.k3 - ctx.q2() * cfg.kappa.k1).is_zero()))
        throw contract_error("scalar_det(Sq2): requires kappa3 = q^2 kappa1");
      if (cfg.uC.size() != a || cfg.vC.size() != b)
        throw input_error("scalar_det(Sq2): cardinality mismatch");
      break;
    case DetWhich::F12:
      if (!((cfg.kappa.k3 - ctx.q * cfg.kappa.k1).is_zero()))
        throw contract_error("scalar_det(F12): requires kappa3 = q kappa1");
      if (cfg.uC.size() != a + 1 || cfg.vC.size() != b)
        throw input_error("scalar_det(F12): requires #uC = #uB + 1");
      break;
  }
  if (!is_onshell(cfg)) throw contract_error("scalar_det: configuration is off-shell");

  auto spec = make_nmatrix_spec(cfg, which);
  const std::size_t n = spec.cols.size();
  std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
  const std::size_t urows = cfg.uC.size();
  for (std::size_t j = 0; j < urows; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      m[j][k] = n_entry_u(spec, j, k);
      if (which == DetWhich::Sq2) m[j][k] *= spec.cols[k].x;
    }
  for (std::size_t j = 0; j < cfg.vB.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) m[urows + j][k] = n_entry_v(spec, j, k);

  std::vector<F> xbar;
  xbar.reserve(n);
  for (const auto& col : spec.cols) xbar.push_back(col.x);
  return s_prefactor(cfg, which, xbar) * det_field(m);
}

// ---------------------------------------------------------------------------
// The G^(kappa) partition sum over a matched pair of subsets, and its closed
// forms at the two special twist ratios.
// ---------------------------------------------------------------------------
template <class F>
F g_kappa_sum(const VarSet<F>& uBI, const VarSet<F>& vCI, const TwistT<F>& kappa,
              const QContext<F>& ctx) {
  if (uBI.size() != vCI.size()) throw input_error("g_kappa_sum: cardinality mismatch");
  const int nI = static_cast<int>(uBI.size());
  F tot(0);
  for (int ni = 0; ni <= nI; ++ni) {
    const int sizes[] = {ni, nI - ni};
    for_each_partition(nI, sizes, [&](const Blocks& bu) {
      VarSet<F> ui = subset(uBI, bu[0]), uiv = subset(uBI, bu[1]);
      for_each_partition(nI, sizes, [&](const Blocks& bv) {
        VarSet<F> vi = subset(vCI, bv[0]), viv = subset(vCI, bv[1]);
        tot += pow_int(kappa.k1 / kappa.k3, ni) * pow_int(ctx.q, 2 * ni) *
               kfun_prod(Kern::f, ui, uiv, ctx) * kfun_prod(Kern::f, viv, vi, ctx) *
               kz(uiv, viv, KVariant::Left, ctx) *
               kz(vi, scale_set(ui, ctx.qm2()), KVariant::Right, ctx);
      });
    });
  }
  return tot;
}

template <class F>
F g_kappa_closed(const VarSet<F>& uBI, const VarSet<F>& vCI, DetWhich which,
                 const QContext<F>& ctx) {
  if (uBI.size() != vCI.size()) throw input_error("g_kappa_closed: cardinality mismatch");
  F val = (uBI.size() % 2 == 0 ? F(1) : F(-1)) * kfun_prod(Kern::t, vCI, uBI, ctx) *
          kfun_prod(Kern::h, vCI, vCI, ctx) * kfun_prod(Kern::h, uBI, uBI, ctx);
  if (which == DetWhich::S1) val *= pprod(uBI) / pprod(vCI);
  return val;
}

// L and M block determinants of the intermediate representation; gamma is a
// mixed subset of {uB, vC} with per-element vC membership flags.
template <class F>
F l_det(const BetheConfigT<F>& cfg, const VarSet<F>& gamma, const std::vector<bool>& in_vC) {
  const std::size_t a = cfg.uC.size();
  if (gamma.size() != a) throw input_error("l_det: block size mismatch");
  NMatrixSpecT<F> spec{&cfg, DetWhich::S1, {}};
  for (std::size_t k = 0; k < gamma.size(); ++k) spec.cols.push_back({gamma[k], in_vC[k], false});
  std::vector<std::vector<F>> m(a, std::vector<F>(a, F(0)));
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t k = 0; k < a; ++k)
      m[j][k] = n_entry_u(spec, j, k) * kfun_prod1(Kern::h, gamma[k], cfg.uB, cfg.ctx);
  return delta(DeltaKind::Prime, cfg.uC, cfg.ctx) * delta(DeltaKind::Plain, gamma, cfg.ctx) *
         det_field(m);
}

template <class F>
F m_det(const BetheConfigT<F>& cfg, const VarSet<F>& gamma, const std::vector<bool>& in_vC) {
  const std::size_t b = cfg.vB.size();
  if (gamma.size() != b) throw input_error("m_det: block size mismatch");
  NMatrixSpecT<F> spec{&cfg, DetWhich::S1, {}};
  for (std::size_t k = 0; k < gamma.size(); ++k) spec.cols.push_back({gamma[k], in_vC[k], false});
  std::vector<std::vector<F>> m(b, std::vector<F>(b, F(0)));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < b; ++k)
      m[j][k] = n_entry_v(spec, j, k) * kfun_prod2(Kern::h, cfg.vC, gamma[k], cfg.ctx);
  return delta(DeltaKind::Prime, cfg.vB, cfg.ctx) * delta(DeltaKind::Plain, gamma, cfg.ctx) *
         det_field(m);
}

// ---------------------------------------------------------------------------
// Concrete routes (exact scalars).
// ---------------------------------------------------------------------------

// Partition sum formula; valid off-shell (generic r tables).
ExactScalar scalar_sum(const BetheConfig& cfg);

// Intermediate representation: partition sum over {uB, vC} splits with the
// G^(kappa) subset sum evaluated brute-force; requires an on-shell config,
// any twist.
ExactScalar scalar_intermediate(const BetheConfig& cfg);

// Exact limit of the generic matrix entry onto a coinciding pair versus the
// closed diagonal formula.
enum class EntryPair { U, V };
struct EntryLimitResult {
  ExactScalar limit;   // eps -> 0 limit of the generic entry along the path
  ExactScalar closed;  // closed diagonal formula at the coincidence
};
EntryLimitResult entry_limit_check(const VarSet<ExactScalar>& uC, const VarSet<ExactScalar>& vC,
                                   const VarSet<ExactScalar>& uB, const VarSet<ExactScalar>& vB,
                                   EntryPair pair, const Twist& kappa, const ExactScalar& rprime,
                                   const QContext<ExactScalar>& ctx);

// Scaling limit q -> 1: every parameter p = 1 + eps p', q = 1 + eps c/2, the
// r tables generated from the Bethe-equation right-hand sides as exact
// rational functions of eps. Returns the eps -> 0 limits of S1 and Sq2 and
// the GL(3)-invariant determinant value built directly from the invariant
// kernels at the slopes.
struct ScalingLimits {
  ExactScalar s1, sq2, invariant;
};
ScalingLimits scaling_limit_scalar(const VarSet<ExactScalar>& uCp, const VarSet<ExactScalar>& vCp,
                                   const VarSet<ExactScalar>& uBp, const VarSet<ExactScalar>& vBp,
                                   const ExactScalar& c, const ExactScalar& k2);

}  // namespace qsp
