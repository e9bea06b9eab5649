#include "qsp/sampler.hpp"

namespace qsp {

bool RatSampler::guarded_ok(const ExactScalar& c) const {
  if (c.is_zero()) return false;
  for (const ExactScalar& p : pool_) {
    ExactScalar ratio = c / p;
    for (long k = -2; k <= 2; ++k)
      if (ratio == pow_int(ctx_.q, 2 * k)) return false;
  }
  return true;
}

ExactScalar RatSampler::draw() {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    long num = uniform(1, bound_);
    long den = uniform(1, bound_);
    long sign = uniform(0, 1) == 0 ? 1 : -1;
    ExactScalar c(sign * num, den);
    if (guarded_ok(c)) {
      pool_.push_back(c);
      return c;
    }
  }
  throw input_error("RatSampler: could not draw a guarded rational; raise the bound");
}

VarSet<ExactScalar> RatSampler::draw_set(std::size_t n) {
  VarSet<ExactScalar> s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.push_back(draw());
  return s;
}

}  // namespace qsp
