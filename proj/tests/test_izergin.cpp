#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/izergin.hpp"
#include "qsp/sampler.hpp"

using namespace qsp;

namespace {
const QContext<ExactScalar> ctx2{ExactScalar(2)};
using VS = VarSet<ExactScalar>;
}

TEST_CASE("small Izergin determinants") {
  CHECK(izergin(VS{}, VS{}, KVariant::Plain, ctx2) == ExactScalar(1));
  CHECK(izergin(VS{}, VS{}, KVariant::Left, ctx2) == ExactScalar(1));

  // K1(x|y) = h t = g
  CHECK(izergin(VS{ExactScalar(3)}, VS{ExactScalar(1)}, KVariant::Plain, ctx2) ==
        kfun(Kern::g, ExactScalar(3), ExactScalar(1), ctx2));
  CHECK(izergin(VS{ExactScalar(3)}, VS{ExactScalar(1)}, KVariant::Plain, ctx2) ==
        ExactScalar(3, 4));

  // frozen regression constants for K2((1,2)|(3,5)) at q = 2
  VS x{ExactScalar(1), ExactScalar(2)};
  VS y{ExactScalar(3), ExactScalar(5)};
  CHECK(izergin(x, y, KVariant::Plain, ctx2) == ExactScalar(57, 128));
  CHECK(izergin(x, y, KVariant::Left, ctx2) == ExactScalar(57, 64));
  CHECK(izergin(x, y, KVariant::Right, ctx2) == ExactScalar(855, 128));

  CHECK_THROWS_AS(izergin(VS{ExactScalar(1)}, VS{}, KVariant::Plain, ctx2), input_error);
  CHECK_THROWS_AS(izergin(VS{ExactScalar(1)}, VS{ExactScalar(1)}, KVariant::Plain, ctx2),
                  pole_error);
}

TEST_CASE("permutation invariance within each argument set") {
  RatSampler smp(53, 40, ctx2);
  auto x = smp.draw_set(3);
  auto y = smp.draw_set(3);
  VS xp{x[1], x[2], x[0]};
  VS yp{y[2], y[0], y[1]};
  for (KVariant v : {KVariant::Plain, KVariant::Left, KVariant::Right})
    CHECK(izergin(x, y, v, ctx2) == izergin(xp, yp, v, ctx2));
}

TEST_CASE("reduction at structural y = q^2 x pairs") {
  RatSampler smp(59, 40, ctx2);
  auto x = smp.draw_set(2);
  auto y = smp.draw_set(2);
  auto z = smp.draw_set(2);
  for (Branch br : {Branch::L, Branch::R}) {
    KVariant v = variant_same(br);
    ExactScalar expect =
        pow_int(-ctx2.q, branch_sign(br) * 2) * izergin(x, y, v, ctx2);
    CHECK(izergin(concat(x, scale_set(z, ctx2.qm2())), concat(y, z), v, ctx2) == expect);
    CHECK(izergin(concat(x, z), concat(y, scale_set(z, ctx2.q2())), v, ctx2) == expect);
  }
}

TEST_CASE("inversion property") {
  RatSampler smp(61, 40, ctx2);
  for (std::size_t n = 0; n <= 4; ++n) {
    smp.reset_pool();
    auto x = smp.draw_set(n);
    auto y = smp.draw_set(n);
    for (Branch br : {Branch::L, Branch::R}) {
      ExactScalar rhs = pow_int(-ctx2.q, branch_sign(br) * static_cast<long>(n)) /
                        kfun_prod(Kern::f, y, x, ctx2) *
                        izergin(y, x, variant_opposite(br), ctx2);
      CHECK(izergin(scale_set(x, ctx2.qm2()), y, variant_same(br), ctx2) == rhs);
      CHECK(izergin(x, scale_set(y, ctx2.q2()), variant_same(br), ctx2) == rhs);
    }
  }
}

TEST_CASE("symbolic slot evaluation") {
  // K1(x|.) as a function of the y slot is g(x, .)
  VS x{ExactScalar(3)};
  VS y{ExactScalar(0)};  // placeholder
  RatFun sym = izergin_symbolic(x, y, KVariant::Plain, true, 0, ctx2);
  CHECK(ratfun_eval(sym, ExactScalar(1)) == ExactScalar(3, 4));
  // residue of g(3, .) = (q - 1/q)/(3 - .) at . = 3 is -(q - 1/q)
  CHECK(ratfun_residue(sym, ExactScalar(3)) == -(ctx2.qd));
  CHECK(ratfun_residue(sym, ExactScalar(3)) == ExactScalar(-3, 2));

  // numeric slot evaluation equals the memoized numeric value
  RatSampler smp(67, 40, ctx2);
  auto xs = smp.draw_set(2);
  auto ys = smp.draw_set(2);
  RatFun sym2 = izergin_symbolic(xs, ys, KVariant::Right, true, 1, ctx2);
  CHECK(ratfun_eval(sym2, ys[1]) == izergin(xs, ys, KVariant::Right, ctx2));
  RatFun sym3 = izergin_symbolic(xs, ys, KVariant::Left, false, 0, ctx2);
  CHECK(ratfun_eval(sym3, xs[0]) == izergin(xs, ys, KVariant::Left, ctx2));

  CHECK_THROWS_AS(izergin_symbolic(xs, ys, KVariant::Plain, true, 5, ctx2), input_error);
}

TEST_CASE("residue property via the symbolic slot") {
  RatSampler smp(71, 40, ctx2);
  for (std::size_t n = 0; n <= 3; ++n) {
    smp.reset_pool();
    auto x = smp.draw_set(n);
    auto y = smp.draw_set(n);
    ExactScalar z = smp.draw();
    for (Branch br : {Branch::L, Branch::R}) {
      KVariant v = variant_same(br);
      auto X = concat(x, VS{z});
      auto Y = concat(y, VS{ExactScalar(0)});
      RatFun sym = izergin_symbolic(X, Y, v, true, Y.size() - 1, ctx2);
      ExactScalar lhs = ratfun_residue(sym, z);
      QContext<RatFun> rctx{RatFun(ctx2.q)};
      RatFun polar = (RatFun::variable() - RatFun(z)) *
                     kfun(Kern::f, RatFun(z), RatFun::variable(), rctx);
      ExactScalar rhs = ratfun_limit(polar, z) * kfun_prod1(Kern::f, z, y, ctx2) *
                        kfun_prod2(Kern::f, x, z, ctx2) * izergin(x, y, v, ctx2);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cache returns consistent values") {
  IzerginCache cache;
  RatSampler smp(73, 40, ctx2);
  auto x = smp.draw_set(2);
  auto y = smp.draw_set(2);
  ExactScalar a = cache.eval(x, y, KVariant::Plain, ctx2);
  CHECK(cache.size() == 1);
  ExactScalar b = cache.eval(x, y, KVariant::Plain, ctx2);
  CHECK(a == b);
  CHECK(cache.size() == 1);
  // permuted arguments hit the same canonical key
  VS xp{x[1], x[0]};
  CHECK(cache.eval(xp, y, KVariant::Plain, ctx2) == a);
  CHECK(cache.size() == 1);
  cache.clear();
  CHECK(cache.size() == 0);
}
