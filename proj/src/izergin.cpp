#include "qsp/izergin.hpp"

#include <algorithm>
#include <mutex>

namespace qsp {

ExactScalar IzerginCache::eval(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y,
                               KVariant variant, const QContext<ExactScalar>& ctx) {
  IzerginKey key{X, Y, static_cast<int>(variant), ctx.q};
  std::sort(key.x.begin(), key.x.end());
  std::sort(key.y.begin(), key.y.end());
  {
    std::shared_lock lk(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  ExactScalar value = izergin_eval(X, Y, variant, ctx);
  {
    std::unique_lock lk(mu_);
    map_.emplace(std::move(key), value);
  }
  return value;
}

std::size_t IzerginCache::size() const {
  std::shared_lock lk(mu_);
  return map_.size();
}

void IzerginCache::clear() {
  std::unique_lock lk(mu_);
  map_.clear();
}

IzerginCache& IzerginCache::global() {
  static IzerginCache cache;
  return cache;
}

ExactScalar izergin(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y, KVariant variant,
                    const QContext<ExactScalar>& ctx) {
  return IzerginCache::global().eval(X, Y, variant, ctx);
}

RatFun izergin_symbolic(const VarSet<ExactScalar>& X, const VarSet<ExactScalar>& Y,
                        KVariant variant, bool slot_in_y, std::size_t slot,
                        const QContext<ExactScalar>& ctx) {
  if (X.size() != Y.size()) throw input_error("izergin_symbolic: cardinality mismatch");
  if ((slot_in_y ? Y.size() : X.size()) <= slot)
    throw input_error("izergin_symbolic: slot index out of range");
  VarSet<RatFun> xs, ys;
  xs.reserve(X.size());
  ys.reserve(Y.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    xs.push_back(!slot_in_y && i == slot ? RatFun::variable() : RatFun(X[i]));
  for (std::size_t j = 0; j < Y.size(); ++j)
    ys.push_back(slot_in_y && j == slot ? RatFun::variable() : RatFun(Y[j]));
  QContext<RatFun> rctx(RatFun(ctx.q));
  return izergin_eval(xs, ys, variant, rctx);
}

}  // namespace qsp
