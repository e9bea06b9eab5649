#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <vector>

#include "qsp/kernel.hpp"
#include "qsp/unipoly.hpp"

namespace qsp {

enum class KVariant { Plain, Left, Right };  // Left: * p(x), Right: * p(y)

// Identity branch selector; carries the paper-wide rule that every -/+
// exponent pair and every (l,r)/(r,l) variant pair is resolved consistently
// by one choice.
enum class Branch { L, R };

inline KVariant variant_same(Branch b) { return b == Branch::L ? KVariant::Left : KVariant::Right; }
inline KVariant variant_opposite(Branch b) { return b == Branch::L ? KVariant::Right : KVariant::Left; }
inline long branch_sign(Branch b) { return b == Branch::L ? -1 : +1; }  // exponent of (-q)^{+-}

// Izergin determinant K_k(x|y) = Delta'(x) Delta(y) h(x,y) det[t(x_i,y_j)],
// with the left/right modifications multiplying by p(x) resp. p(y).
//
// Pairs with y_j = q^2 x_i are struck exactly via the reduction property
// before the determinant is formed (each struck pair contributes a factor
// -1/(q x_i)); such pairs arise structurally in the partition sums. Remaining
// coincidences are genuine poles.
template <class F>
F izergin_eval(const VarSet<F>& X, const VarSet<F>& Y, KVariant variant,
               const QContext<F>& ctx) {
  if (X.size() != Y.size())
    throw input_error("izergin: cardinality mismatch " + std::to_string(X.size()) + " vs " +
                      std::to_string(Y.size()));
  F weight(1);
  if (variant == KVariant::Left) weight = pprod(X);
  if (variant == KVariant::Right) weight = pprod(Y);

  VarSet<F> xs = X, ys = Y;
  F fac(1);
  const F q2 = ctx.q2();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (std::size_t i = 0; i < xs.size() && !reduced; ++i)
      for (std::size_t j = 0; j < ys.size() && !reduced; ++j)
        if (ys[j] == q2 * xs[i]) {
          fac *= F(-1) / (ctx.q * xs[i]);
          xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
          ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(j));
          reduced = true;
        }
  }

  const std::size_t n = xs.size();
  if (n == 0) return weight * fac;

  std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = kfun(Kern::t, xs[i], ys[j], ctx);
  F base = delta(DeltaKind::Prime, xs, ctx) * delta(DeltaKind::Plain, ys, ctx) *
           kfun_prod(Kern::h, xs, ys, ctx) * det_field(m);
  return weight * fac * base;
}

// Canonical memoization key: argument multisets sorted, variant tag, q.
struct IzerginKey {
  std::vector<ExactScalar> x, y;
  int variant;
  ExactScalar q;

  friend bool operator<(const IzerginKey& a, const IzerginKey& b) {
    if (a.variant != b.variant) return a.variant < b.variant;
    if (a.q != b.q) return a.q < b.q;
    if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
    for (std::size_t i = 0; i < a.x.size(); ++i)
      if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
    for (std::size_t i = 0; i < a.y.size(); ++i)
      if (a.y[i] != b.y[i]) return a.y[i] < b.y[i];
    return false;
  }
};

// Shared cache of numeric Izergin evaluations; concurrent reads with
// exclusive insertion. Exactness makes results scheduling-independent.
class IzerginCache {
 public:
  ExactScalar eval(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y, KVariant variant,
                   const QContext<ExactScalar>& ctx);
  std::size_t size() const;
  void clear();
  static IzerginCache& global();

 private:
  mutable std::shared_mutex mu_;
  std::map<IzerginKey, ExactScalar> map_;
};

// Cached numeric evaluation (global cache).
ExactScalar izergin(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y, KVariant variant,
                    const QContext<ExactScalar>& ctx);

// Dispatch helper for field-generic identity code: cached for exact scalars,
// direct evaluation otherwise.
template <class F>
F kz(const VarSet<F>& X, const VarSet<F>& Y, KVariant variant, const QContext<F>& ctx) {
  if constexpr (std::is_same_v<F, ExactScalar>) {
    return izergin(X, Y, variant, ctx);
  } else {
    return izergin_eval(X, Y, variant, ctx);
  }
}

// Izergin determinant as an exact univariate rational function of one slot
// variable (slot_in_y selects the side, slot index within it). The remaining
// arguments are numeric.
RatFun izergin_symbolic(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y,
                        KVariant variant, bool slot_in_y, std::size_t slot,
                        const QContext<ExactScalar>& ctx);

}  // namespace qsp
