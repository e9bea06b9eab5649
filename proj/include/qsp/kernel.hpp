#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsp/errors.hpp"
#include "qsp/exact.hpp"
#include "qsp/unipoly.hpp"

namespace qsp {

// Ordered set of spectral parameters (natural order = subscript order).
template <class F>
using VarSet = std::vector<F>;

template <class F>
F pow_int(F base, long e) {
  if (e < 0) return F(1) / pow_int(std::move(base), -e);
  F acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Deformation-parameter context; q != 0 and q^2 != 1 so that q - q^{-1} != 0.
template <class F>
struct QContext {
  F q, qinv, qd;  // qd = q - q^{-1}
  explicit QContext(F qq) : q(std::move(qq)) {
    if (q.is_zero()) throw input_error("QContext: q must be nonzero");
    qinv = F(1) / q;
    qd = q - qinv;
    if (qd.is_zero()) throw input_error("QContext: q^2 must differ from 1");
  }
  F q2() const { return q * q; }
  F qm2() const { return qinv * qinv; }
};

enum class Kern { f, g, h, t };

inline const char* kern_name(Kern k) {
  switch (k) {
    case Kern::f: return "f";
    case Kern::g: return "g";
    case Kern::h: return "h";
    default: return "t";
  }
}

// f = (qx - q^{-1}y)/(x - y), g = (q - q^{-1})/(x - y), h = f/g, t = g/h.
// h is regular at x = y (h(x,x) = x); f, g, t pole there; h, t pole where
// qx = q^{-1}y.
template <class F>
F kfun(Kern k, const F& x, const F& y, const QContext<F>& ctx) {
  auto pole = [&](const char* which) {
    return pole_error(std::string("kernel ") + kern_name(k) + ": " + which + " pole");
  };
  switch (k) {
    case Kern::f: {
      F d = x - y;
      if (d.is_zero()) throw pole("x=y");
      return (ctx.q * x - ctx.qinv * y) / d;
    }
    case Kern::g: {
      F d = x - y;
      if (d.is_zero()) throw pole("x=y");
      return ctx.qd / d;
    }
    case Kern::h: {
      F n = ctx.q * x - ctx.qinv * y;
      if (n.is_zero()) throw pole("qx=y/q");
      return n / ctx.qd;
    }
    default: {
      F d = x - y;
      if (d.is_zero()) throw pole("x=y");
      F n = ctx.q * x - ctx.qinv * y;
      if (n.is_zero()) throw pole("qx=y/q");
      return ctx.qd * ctx.qd / (d * n);
    }
  }
}

template <class F>
F kfun_prod(Kern k, const VarSet<F>& X, const VarSet<F>& Y, const QContext<F>& ctx) {
  F acc(1);
  for (const F& x : X)
    for (const F& y : Y) acc *= kfun(k, x, y, ctx);
  return acc;
}

template <class F>
F kfun_prod1(Kern k, const F& x, const VarSet<F>& Y, const QContext<F>& ctx) {
  F acc(1);
  for (const F& y : Y) acc *= kfun(k, x, y, ctx);
  return acc;
}

template <class F>
F kfun_prod2(Kern k, const VarSet<F>& X, const F& y, const QContext<F>& ctx) {
  F acc(1);
  for (const F& x : X) acc *= kfun(k, x, y, ctx);
  return acc;
}

enum class DeltaKind { Plain, Prime };  // Plain: prod_{j>k} g(w_j,w_k); Prime: j<k

template <class F>
F delta(DeltaKind kind, const VarSet<F>& W, const QContext<F>& ctx) {
  F acc(1);
  const std::size_t n = W.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (kind == DeltaKind::Plain ? (j > k) : (j < k))
        acc *= kfun(Kern::g, W[j], W[k], ctx);
    }
  return acc;
}

template <class F>
F pprod(const VarSet<F>& X) {
  F acc(1);
  for (const F& x : X) acc *= x;
  return acc;
}

// C_h = h(vC,vC) h(vC,uB) h(uB,uB); the same-set products run over all pairs
// including the diagonal h(x,x) = x.
template <class F>
F c_h(const VarSet<F>& vC, const VarSet<F>& uB, const QContext<F>& ctx) {
  return kfun_prod(Kern::h, vC, vC, ctx) * kfun_prod(Kern::h, vC, uB, ctx) *
         kfun_prod(Kern::h, uB, uB, ctx);
}

// GL(3)-invariant counterparts: f0 = (x-y+c)/(x-y), g0 = c/(x-y),
// h0 = (x-y+c)/c, t0 = c^2/((x-y)(x-y+c)).
template <class F>
F kfun_invariant(Kern k, const F& x, const F& y, const F& c) {
  if (c.is_zero()) throw input_error("kfun_invariant: c must be nonzero");
  auto pole = [&](const char* which) {
    return pole_error(std::string("invariant kernel ") + kern_name(k) + ": " + which + " pole");
  };
  F d = x - y;
  switch (k) {
    case Kern::f:
      if (d.is_zero()) throw pole("x=y");
      return (d + c) / d;
    case Kern::g:
      if (d.is_zero()) throw pole("x=y");
      return c / d;
    case Kern::h: {
      F n = d + c;
      if (n.is_zero()) throw pole("x-y=-c");
      return n / c;
    }
    default: {
      F n = d + c;
      if (d.is_zero()) throw pole("x=y");
      if (n.is_zero()) throw pole("x-y=-c");
      return c * c / (d * n);
    }
  }
}

// Kernel under the scaling substitution u = 1 + eps x', v = 1 + eps y',
// q = 1 + eps c/2, as an exact rational function of eps. Its limit at eps = 0
// is the invariant kernel at (x', y', c).
inline RatFun scaling_substitute(Kern k, const ExactScalar& xp, const ExactScalar& yp,
                                 const ExactScalar& c) {
  if (xp == yp) throw pole_error("scaling_substitute: x'=y'");
  if (c.is_zero()) throw input_error("scaling_substitute: c must be nonzero");
  RatFun eps = RatFun::variable();
  RatFun u = RatFun(1) + eps * RatFun(xp);
  RatFun v = RatFun(1) + eps * RatFun(yp);
  QContext<RatFun> ctx(RatFun(1) + eps * RatFun(c / ExactScalar(2)));
  return kfun(k, u, v, ctx);
}

// ---- small VarSet helpers ----

template <class F>
VarSet<F> scale_set(const VarSet<F>& X, const F& s) {
  VarSet<F> r;
  r.reserve(X.size());
  for (const F& x : X) r.push_back(x * s);
  return r;
}

template <class F>
VarSet<F> concat(VarSet<F> a, const VarSet<F>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class F>
VarSet<F> subset(const VarSet<F>& X, std::span<const int> idx) {
  VarSet<F> r;
  r.reserve(idx.size());
  for (int i : idx) r.push_back(X[static_cast<std::size_t>(i)]);
  return r;
}

template <class F>
VarSet<F> erase_at(const VarSet<F>& X, std::size_t i) {
  VarSet<F> r;
  r.reserve(X.size() - 1);
  for (std::size_t j = 0; j < X.size(); ++j)
    if (j != i) r.push_back(X[j]);
  return r;
}

}  // namespace qsp
