#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsp/kernel.hpp"
#include "qsp/sampler.hpp"

using namespace qsp;

namespace {
const QContext<ExactScalar> ctx2{ExactScalar(2)};
}

TEST_CASE("QContext guards") {
  CHECK_THROWS_AS(QContext<ExactScalar>(ExactScalar(0)), input_error);
  CHECK_THROWS_AS(QContext<ExactScalar>(ExactScalar(1)), input_error);
  CHECK_THROWS_AS(QContext<ExactScalar>(ExactScalar(-1)), input_error);
}

TEST_CASE("kernel values at q = 2") {
  CHECK(kfun(Kern::f, ExactScalar(3), ExactScalar(1), ctx2) == ExactScalar(11, 4));
  CHECK(kfun(Kern::h, ExactScalar(3), ExactScalar(1), ctx2) == ExactScalar(11, 3));
  CHECK(kfun(Kern::t, ExactScalar(3), ExactScalar(1), ctx2) == ExactScalar(9, 44));
  CHECK(kfun(Kern::g, ExactScalar(1), ExactScalar(4), ctx2) == ExactScalar(-1, 2));
  // g(x q^-2, x) = -q/x at x = 4
  CHECK(kfun(Kern::g, ExactScalar(1), ExactScalar(4), ctx2) ==
        -ctx2.q / ExactScalar(4));

  CHECK_THROWS_AS(kfun(Kern::f, ExactScalar(3), ExactScalar(3), ctx2), pole_error);
  CHECK_THROWS_AS(kfun(Kern::g, ExactScalar(3), ExactScalar(3), ctx2), pole_error);
  CHECK_THROWS_AS(kfun(Kern::t, ExactScalar(1), ExactScalar(4), ctx2), pole_error);
  CHECK_THROWS_AS(kfun(Kern::h, ExactScalar(1), ExactScalar(4), ctx2), pole_error);
}

TEST_CASE("set products") {
  VarSet<ExactScalar> empty;
  VarSet<ExactScalar> y1{ExactScalar(1)};
  CHECK(kfun_prod(Kern::f, empty, y1, ctx2) == ExactScalar(1));
  CHECK(kfun_prod(Kern::f, VarSet<ExactScalar>{ExactScalar(3)}, y1, ctx2) ==
        ExactScalar(11, 4));
  // h({3,5},{1}) = h(3,1) h(5,1) = (11/3)(19/3)
  CHECK(kfun_prod(Kern::h, VarSet<ExactScalar>{ExactScalar(3), ExactScalar(5)}, y1, ctx2) ==
        ExactScalar(209, 9));
}

TEST_CASE("delta products") {
  CHECK(delta(DeltaKind::Plain, VarSet<ExactScalar>{ExactScalar(7)}, ctx2) == ExactScalar(1));
  VarSet<ExactScalar> w{ExactScalar(3), ExactScalar(1)};
  CHECK(delta(DeltaKind::Plain, w, ctx2) == kfun(Kern::g, ExactScalar(1), ExactScalar(3), ctx2));
  CHECK(delta(DeltaKind::Plain, w, ctx2) == ExactScalar(-3, 4));
  CHECK(delta(DeltaKind::Prime, w, ctx2) == ExactScalar(3, 4));
  CHECK_THROWS_AS(delta(DeltaKind::Plain, VarSet<ExactScalar>{ExactScalar(1), ExactScalar(1)},
                        ctx2),
                  pole_error);
}

TEST_CASE("pprod") {
  CHECK(pprod(VarSet<ExactScalar>{ExactScalar(2), ExactScalar(3), ExactScalar(5)}) ==
        ExactScalar(30));
  CHECK(pprod(VarSet<ExactScalar>{}) == ExactScalar(1));
  CHECK(pprod(VarSet<ExactScalar>{ExactScalar(-1, 2), ExactScalar(4)}) == ExactScalar(-2));
}

TEST_CASE("c_h includes diagonal h(x,x) = x") {
  CHECK(c_h(VarSet<ExactScalar>{}, VarSet<ExactScalar>{}, ctx2) == ExactScalar(1));
  CHECK(c_h(VarSet<ExactScalar>{}, VarSet<ExactScalar>{ExactScalar(3)}, ctx2) == ExactScalar(3));
  CHECK(c_h(VarSet<ExactScalar>{ExactScalar(5)}, VarSet<ExactScalar>{}, ctx2) == ExactScalar(5));
}

TEST_CASE("all six shift relations hold at random guarded points") {
  for (const ExactScalar& q : {ExactScalar(2), ExactScalar(3, 2)}) {
    QContext<ExactScalar> ctx(q);
    RatSampler smp(41, 40, ctx);
    for (int i = 0; i < 50; ++i) {
      smp.reset_pool();
      ExactScalar x = smp.draw(), y = smp.draw();
      CHECK(kfun(Kern::h, x * ctx.qm2(), y, ctx) == ctx.qinv / kfun(Kern::g, x, y, ctx));
      CHECK(kfun(Kern::g, x, y * ctx.qm2(), ctx) == ctx.q / kfun(Kern::h, x, y, ctx));
      CHECK(kfun(Kern::g, x * ctx.qm2(), x, ctx) == -ctx.q / x);
      CHECK(kfun(Kern::t, x * ctx.qm2(), y, ctx) == ctx.q2() * kfun(Kern::t, y, x, ctx));
      CHECK(kfun(Kern::t, x, y * ctx.q2(), ctx) == ctx.qm2() * kfun(Kern::t, y, x, ctx));
      CHECK(kfun(Kern::f, x * ctx.qm2(), y, ctx) == ExactScalar(1) / kfun(Kern::f, y, x, ctx));
      CHECK(kfun(Kern::g, x, y, ctx) == -kfun(Kern::g, y, x, ctx));
      CHECK(kfun(Kern::f, x, y, ctx) ==
            kfun(Kern::g, x, y, ctx) * kfun(Kern::h, x, y, ctx));
      CHECK(kfun(Kern::h, x, x, ctx) == x);
    }
  }
}

TEST_CASE("invariant kernels") {
  ExactScalar c(2);
  CHECK(kfun_invariant(Kern::f, ExactScalar(3), ExactScalar(1), c) == ExactScalar(2));
  CHECK(kfun_invariant(Kern::g, ExactScalar(3), ExactScalar(1), c) == ExactScalar(1));
  CHECK(kfun_invariant(Kern::t, ExactScalar(3), ExactScalar(1), c) == ExactScalar(1, 2));
  CHECK(kfun_invariant(Kern::t, ExactScalar(3), ExactScalar(1), c) ==
        kfun_invariant(Kern::g, ExactScalar(3), ExactScalar(1), c) /
            kfun_invariant(Kern::h, ExactScalar(3), ExactScalar(1), c));
  CHECK_THROWS_AS(kfun_invariant(Kern::f, ExactScalar(1), ExactScalar(1), c), pole_error);
  CHECK_THROWS_AS(kfun_invariant(Kern::t, ExactScalar(1), ExactScalar(3), c), pole_error);
  CHECK_THROWS_AS(kfun_invariant(Kern::g, ExactScalar(1), ExactScalar(3), ExactScalar(0)),
                  input_error);
}

TEST_CASE("scaling substitution tends to the invariant kernels") {
  ExactScalar c(2);
  CHECK(ratfun_limit(scaling_substitute(Kern::f, ExactScalar(3), ExactScalar(1), c),
                     ExactScalar(0)) == ExactScalar(2));
  CHECK(ratfun_limit(scaling_substitute(Kern::g, ExactScalar(3), ExactScalar(1), c),
                     ExactScalar(0)) == ExactScalar(1));
  CHECK_THROWS_AS(scaling_substitute(Kern::h, ExactScalar(3), ExactScalar(3), c), pole_error);

  // 20 random slope pairs, all four kinds
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 20) {
    ExactScalar xp(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
    ExactScalar yp(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
    ExactScalar d = xp - yp;
    if (d.is_zero() || d == c || d == -c) continue;
    for (Kern k : {Kern::f, Kern::g, Kern::h, Kern::t})
      CHECK(ratfun_limit(scaling_substitute(k, xp, yp, c), ExactScalar(0)) ==
            kfun_invariant(k, xp, yp, c));
    ++done;
  }
}
