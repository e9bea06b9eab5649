#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsp/kernel.hpp"

namespace qsp {

// Seeded generator of random rational parameters with the global degeneracy
// guard: a draw is rejected when it is zero or lies on any q^{2k} ray
// (k = -2..2) through a previously accepted pool member. All poles appearing
// in the suites (including the q^{-4} shifts) are thereby avoided.
class RatSampler {
 public:
  RatSampler(std::uint64_t seed, long bound, const QContext<ExactScalar>& ctx)
      : rng_(seed), bound_(bound < 1 ? 1 : bound), ctx_(ctx) {}

  ExactScalar draw();
  VarSet<ExactScalar> draw_set(std::size_t n);
  void reset_pool() { pool_.clear(); }
  const std::vector<ExactScalar>& pool() const { return pool_; }

 private:
  // bounded draw independent of std library distribution internals
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool guarded_ok(const ExactScalar& c) const;

  std::mt19937_64 rng_;
  long bound_;
  QContext<ExactScalar> ctx_;
  std::vector<ExactScalar> pool_;
};

}  // namespace qsp
