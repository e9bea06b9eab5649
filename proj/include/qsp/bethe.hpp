#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qsp/izergin.hpp"
#include "qsp/kernel.hpp"

namespace qsp {

template <class F>
struct TwistT {
  F k1{1}, k2{1}, k3{1};
};

template <class F>
bool twist_is_unit(const TwistT<F>& t) {
  return (t.k1 - F(1)).is_zero() && (t.k2 - F(1)).is_zero() && (t.k3 - F(1)).is_zero();
}

// Free functional data of the generalized model: r (and optionally r') values
// pinned at finitely many points.
template <class F>
class RTableT {
 public:
  struct Entry {
    F point;
    F r;
    std::optional<F> rp;
  };

  void set(F point, F r, std::optional<F> rp = std::nullopt) {
    for (auto& e : entries_)
      if (e.point == point) {
        e.r = std::move(r);
        if (rp) e.rp = std::move(rp);
        return;
      }
    entries_.push_back(Entry{std::move(point), std::move(r), std::move(rp)});
  }

  const F& r_at(const F& p) const {
    for (const auto& e : entries_)
      if (e.point == p) return e.r;
    throw input_error("RTable: no r value supplied at requested point");
  }

  const F& rp_at(const F& p) const {
    for (const auto& e : entries_)
      if (e.point == p) {
        if (!e.rp) throw input_error("RTable: no r' value supplied at requested point");
        return *e.rp;
      }
    throw input_error("RTable: no r' value supplied at requested point");
  }

  bool has(const F& p) const {
    for (const auto& e : entries_)
      if (e.point == p) return true;
    return false;
  }

  F prod(const VarSet<F>& pts) const {
    F acc(1);
    for (const F& p : pts) acc *= r_at(p);
    return acc;
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

// Generalized-model data for a scalar product: the four Bethe parameter sets,
// the twist, and the r tables. The C side is meant to satisfy the twisted
// Bethe equations, the B side the ordinary ones; nothing is solved, the r
// values are free data pinned by those equations.
template <class F>
struct BetheConfigT {
  VarSet<F> uC, vC, uB, vB;
  TwistT<F> kappa;
  RTableT<F> r1, r3;
  QContext<F> ctx;
  std::optional<F> z;  // spectral point for form factors

  BetheConfigT(VarSet<F> uC_, VarSet<F> vC_, VarSet<F> uB_, VarSet<F> vB_, TwistT<F> kappa_,
               QContext<F> ctx_)
      : uC(std::move(uC_)), vC(std::move(vC_)), uB(std::move(uB_)), vB(std::move(vB_)),
        kappa(std::move(kappa_)), ctx(std::move(ctx_)) {
    if (kappa.k1.is_zero() || kappa.k2.is_zero() || kappa.k3.is_zero())
      throw input_error("BetheConfig: twist components must be nonzero");
  }
};

using BetheConfig = BetheConfigT<ExactScalar>;
using Twist = TwistT<ExactScalar>;
using RTable = RTableT<ExactScalar>;

// Twisted Bethe equation right-hand sides; kappa = (1,1,1) gives the ordinary
// equations.
template <class F>
F r1_bethe_rhs(std::size_t j, const VarSet<F>& u, const VarSet<F>& v, const F& k1, const F& k2,
               const QContext<F>& ctx) {
  VarSet<F> rest = erase_at(u, j);
  return k2 / k1 * kfun_prod1(Kern::f, u[j], rest, ctx) /
         kfun_prod2(Kern::f, rest, u[j], ctx) * kfun_prod2(Kern::f, v, u[j], ctx);
}

template <class F>
F r3_bethe_rhs(std::size_t j, const VarSet<F>& v, const VarSet<F>& u, const F& k2, const F& k3,
               const QContext<F>& ctx) {
  VarSet<F> rest = erase_at(v, j);
  return k2 / k3 * kfun_prod2(Kern::f, rest, v[j], ctx) /
         kfun_prod1(Kern::f, v[j], rest, ctx) * kfun_prod1(Kern::f, v[j], u, ctx);
}

// r values making (u, v) a solution of the (twisted) Bethe system.
template <class F>
std::pair<std::vector<F>, std::vector<F>> onshell_r_values(const VarSet<F>& u, const VarSet<F>& v,
                                                           const TwistT<F>& kappa,
                                                           const QContext<F>& ctx) {
  std::vector<F> r1v, r3v;
  r1v.reserve(u.size());
  r3v.reserve(v.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    r1v.push_back(r1_bethe_rhs(j, u, v, kappa.k1, kappa.k2, ctx));
  for (std::size_t j = 0; j < v.size(); ++j)
    r3v.push_back(r3_bethe_rhs(j, v, u, kappa.k2, kappa.k3, ctx));
  return {std::move(r1v), std::move(r3v)};
}

// Config with C tables from the twisted equations and B tables from the
// ordinary ones. Spectral-point entries are free data.
template <class F>
BetheConfigT<F> make_onshell_config(VarSet<F> uC, VarSet<F> vC, VarSet<F> uB, VarSet<F> vB,
                                    TwistT<F> kappa, QContext<F> ctx,
                                    std::optional<std::type_identity_t<F>> z = std::nullopt,
                                    std::optional<std::type_identity_t<F>> r1_at_z = std::nullopt,
                                    std::optional<std::type_identity_t<F>> r3_at_z = std::nullopt) {
  BetheConfigT<F> cfg(std::move(uC), std::move(vC), std::move(uB), std::move(vB), std::move(kappa),
                      std::move(ctx));
  auto [r1C, r3C] = onshell_r_values(cfg.uC, cfg.vC, cfg.kappa, cfg.ctx);
  TwistT<F> unit;
  auto [r1B, r3B] = onshell_r_values(cfg.uB, cfg.vB, unit, cfg.ctx);
  for (std::size_t j = 0; j < cfg.uC.size(); ++j) cfg.r1.set(cfg.uC[j], r1C[j]);
  for (std::size_t j = 0; j < cfg.uB.size(); ++j) cfg.r1.set(cfg.uB[j], r1B[j]);
  for (std::size_t j = 0; j < cfg.vC.size(); ++j) cfg.r3.set(cfg.vC[j], r3C[j]);
  for (std::size_t j = 0; j < cfg.vB.size(); ++j) cfg.r3.set(cfg.vB[j], r3B[j]);
  if (z) {
    cfg.z = *z;
    if (r1_at_z) cfg.r1.set(*z, *r1_at_z);
    if (r3_at_z) cfg.r3.set(*z, *r3_at_z);
  }
  return cfg;
}

// Prefactor C_h of the determinant representations, read off a configuration.
template <class F>
F c_h(const BetheConfigT<F>& cfg) {
  return c_h(cfg.vC, cfg.uB, cfg.ctx);
}

enum class Side { C, B };

// (Twisted) transfer-matrix eigenvalue at spectral point w; requires r1(w)
// and r3(w) in the tables.
template <class F>
F tau(const F& w, Side side, const BetheConfigT<F>& cfg, bool twisted) {
  const VarSet<F>& u = side == Side::C ? cfg.uC : cfg.uB;
  const VarSet<F>& v = side == Side::C ? cfg.vC : cfg.vB;
  F k1(1), k2(1), k3(1);
  if (twisted) {
    k1 = cfg.kappa.k1;
    k2 = cfg.kappa.k2;
    k3 = cfg.kappa.k3;
  }
  return k1 * cfg.r1.r_at(w) * kfun_prod2(Kern::f, u, w, cfg.ctx) +
         k2 * kfun_prod1(Kern::f, w, u, cfg.ctx) * kfun_prod2(Kern::f, v, w, cfg.ctx) +
         k3 * cfg.r3.r_at(w) * kfun_prod1(Kern::f, w, v, cfg.ctx);
}

template <class F>
struct BECheck {
  bool pass;
  F u_lhs{0}, u_rhs{0}, v_lhs{0}, v_rhs{0};
};

// Product-form (twisted) Bethe equations for a given partition of the side's
// u set and v set, including the (k2/k1)^{kI}, (k2/k3)^{nI} powers.
template <class F>
BECheck<F> be_partition_check(const BetheConfigT<F>& cfg, Side side,
                              std::span<const int> u_first, std::span<const int> v_first) {
  const VarSet<F>& u = side == Side::C ? cfg.uC : cfg.uB;
  const VarSet<F>& v = side == Side::C ? cfg.vC : cfg.vB;
  F k1(1), k2(1), k3(1);
  if (side == Side::C) {
    k1 = cfg.kappa.k1;
    k2 = cfg.kappa.k2;
    k3 = cfg.kappa.k3;
  }
  VarSet<F> uI = subset(u, u_first), vI = subset(v, v_first);
  VarSet<F> uII, vII;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::find(u_first.begin(), u_first.end(), static_cast<int>(i)) == u_first.end())
      uII.push_back(u[i]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::find(v_first.begin(), v_first.end(), static_cast<int>(i)) == v_first.end())
      vII.push_back(v[i]);

  BECheck<F> r;
  r.u_lhs = cfg.r1.prod(uI);
  r.u_rhs = pow_int(k2 / k1, static_cast<long>(uI.size())) *
            kfun_prod(Kern::f, uI, uII, cfg.ctx) / kfun_prod(Kern::f, uII, uI, cfg.ctx) *
            kfun_prod(Kern::f, v, uI, cfg.ctx);
  r.v_lhs = cfg.r3.prod(vI);
  r.v_rhs = pow_int(k2 / k3, static_cast<long>(vI.size())) *
            kfun_prod(Kern::f, vII, vI, cfg.ctx) / kfun_prod(Kern::f, vI, vII, cfg.ctx) *
            kfun_prod(Kern::f, vI, u, cfg.ctx);
  r.pass = (r.u_lhs - r.u_rhs).is_zero() && (r.v_lhs - r.v_rhs).is_zero();
  return r;
}

// All single-point (twisted) Bethe equations hold on both sides.
template <class F>
bool is_onshell(const BetheConfigT<F>& cfg) {
  for (Side side : {Side::C, Side::B}) {
    const VarSet<F>& u = side == Side::C ? cfg.uC : cfg.uB;
    const VarSet<F>& v = side == Side::C ? cfg.vC : cfg.vB;
    for (std::size_t j = 0; j < u.size(); ++j) {
      int idx[] = {static_cast<int>(j)};
      if (!be_partition_check(cfg, side, idx, {}).pass) return false;
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      int idx[] = {static_cast<int>(j)};
      if (!be_partition_check(cfg, side, {}, idx).pass) return false;
    }
  }
  return true;
}

}  // namespace qsp
