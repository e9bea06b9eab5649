#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/bethe.hpp"
#include "qsp/partitions.hpp"
#include "qsp/sampler.hpp"

using namespace qsp;

namespace {
const QContext<ExactScalar> ctx2{ExactScalar(2)};
using VS = VarSet<ExactScalar>;
const Twist unit{};
}

TEST_CASE("on-shell r values, small cases") {
  // a=1, b=0, unit twist: all products empty
  {
    auto [r1v, r3v] = onshell_r_values(VS{ExactScalar(3)}, VS{}, unit, ctx2);
    REQUIRE(r1v.size() == 1);
    CHECK(r1v[0] == ExactScalar(1));
    CHECK(r3v.empty());
  }
  // a=1, b=0, twisted: r1 = k2/k1
  {
    Twist kap{ExactScalar(7, 2), ExactScalar(5, 3), ExactScalar(9)};
    auto [r1v, r3v] = onshell_r_values(VS{ExactScalar(3)}, VS{}, kap, ctx2);
    CHECK(r1v[0] == ExactScalar(5, 3) / ExactScalar(7, 2));
  }
  // a=1, b=1: r1(3) = f(5,3), r3(5) = f(5,3) = 17/4
  {
    auto [r1v, r3v] = onshell_r_values(VS{ExactScalar(3)}, VS{ExactScalar(5)}, unit, ctx2);
    CHECK(r1v[0] == ExactScalar(17, 4));
    CHECK(r3v[0] == ExactScalar(17, 4));
    CHECK(r1v[0] == kfun(Kern::f, ExactScalar(5), ExactScalar(3), ctx2));
  }
}

TEST_CASE("transfer-matrix eigenvalue") {
  // a=b=0: tau = r1(w) + 1 + r3(w)
  {
    BetheConfig cfg(VS{}, VS{}, VS{}, VS{}, unit, ctx2);
    ExactScalar w(7);
    cfg.r1.set(w, ExactScalar(2));
    cfg.r3.set(w, ExactScalar(1, 3));
    CHECK(tau(w, Side::C, cfg, false) == ExactScalar(2) + ExactScalar(1) + ExactScalar(1, 3));
    CHECK(tau(w, Side::C, cfg, true) == tau(w, Side::C, cfg, false));  // unit twist
  }
  // a=1, b=0 with r1(7) = 2, r3(7) = 0: 2 f(3,7) + f(7,3) = 15/8
  {
    BetheConfig cfg(VS{}, VS{}, VS{ExactScalar(3)}, VS{}, unit, ctx2);
    ExactScalar w(7);
    cfg.r1.set(w, ExactScalar(2));
    cfg.r3.set(w, ExactScalar(0));
    CHECK(tau(w, Side::B, cfg, false) == ExactScalar(15, 8));
  }
  // twisted vs untwisted at a nontrivial twist
  {
    Twist kap{ExactScalar(2), ExactScalar(5, 3), ExactScalar(7, 4)};
    BetheConfig cfg(VS{ExactScalar(3)}, VS{ExactScalar(5)}, VS{}, VS{}, kap, ctx2);
    ExactScalar w(7);
    cfg.r1.set(w, ExactScalar(1, 2));
    cfg.r3.set(w, ExactScalar(4));
    ExactScalar expect = kap.k1 * ExactScalar(1, 2) *
                             kfun(Kern::f, ExactScalar(3), w, ctx2) +
                         kap.k2 * kfun(Kern::f, w, ExactScalar(3), ctx2) *
                             kfun(Kern::f, ExactScalar(5), w, ctx2) +
                         kap.k3 * ExactScalar(4) * kfun(Kern::f, w, ExactScalar(5), ctx2);
    CHECK(tau(w, Side::C, cfg, true) == expect);
  }
  // missing r entry
  {
    BetheConfig cfg(VS{}, VS{}, VS{}, VS{}, unit, ctx2);
    CHECK_THROWS_AS(tau(ExactScalar(7), Side::C, cfg, false), input_error);
  }
}

TEST_CASE("partition-form Bethe equations hold for every partition") {
  Twist kap{ExactScalar(1), ExactScalar(5, 3), ExactScalar(2)};
  RatSampler smp(79, 40, ctx2);
  for (std::size_t a : {1u, 2u, 3u})
    for (std::size_t b : {0u, 2u, 3u}) {
      smp.reset_pool();
      auto uC = smp.draw_set(a);
      auto vC = smp.draw_set(b);
      auto uB = smp.draw_set(a);
      auto vB = smp.draw_set(b);
      auto cfg = make_onshell_config(uC, vC, uB, vB, kap, ctx2);
      CHECK(is_onshell(cfg));
      for (Side side : {Side::C, Side::B}) {
        for (int k = 0; k <= static_cast<int>(a); ++k) {
          const int su[] = {k, static_cast<int>(a) - k};
          for_each_partition(static_cast<int>(a), su, [&](const Blocks& bu) {
            for (int n = 0; n <= static_cast<int>(b); ++n) {
              const int sv[] = {n, static_cast<int>(b) - n};
              for_each_partition(static_cast<int>(b), sv, [&](const Blocks& bv) {
                auto r = be_partition_check(cfg, side, bu[0], bv[0]);
                CHECK(r.pass);
              });
            }
          });
        }
      }
    }
}

TEST_CASE("twisted tables at unit twist equal untwisted tables") {
  RatSampler smp(83, 40, ctx2);
  auto u = smp.draw_set(2);
  auto v = smp.draw_set(2);
  auto [r1t, r3t] = onshell_r_values(u, v, unit, ctx2);
  Twist explicit_unit{ExactScalar(1), ExactScalar(1), ExactScalar(1)};
  auto [r1u, r3u] = onshell_r_values(u, v, explicit_unit, ctx2);
  CHECK(r1t == r1u);
  CHECK(r3t == r3u);
}

TEST_CASE("config rejects zero twist components") {
  Twist bad{ExactScalar(0), ExactScalar(1), ExactScalar(1)};
  CHECK_THROWS_AS(BetheConfig(VS{}, VS{}, VS{}, VS{}, bad, ctx2), input_error);
}

TEST_CASE("C and B tables live on distinct points for generic configs") {
  RatSampler smp(89, 40, ctx2);
  auto uC = smp.draw_set(2);
  auto vC = smp.draw_set(1);
  auto uB = smp.draw_set(2);
  auto vB = smp.draw_set(1);
  auto cfg = make_onshell_config(uC, vC, uB, vB, unit, ctx2);
  for (const auto& p : uC) CHECK(std::find(uB.begin(), uB.end(), p) == uB.end());
  CHECK(cfg.r1.entries().size() == 4);
  CHECK(cfg.r3.entries().size() == 2);
}
