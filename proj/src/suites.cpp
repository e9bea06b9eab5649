#include "qsp/suites.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "qsp/formfactor.hpp"
#include "qsp/identities.hpp"
#include "qsp/sampler.hpp"
#include "qsp/scalarprod.hpp"

namespace qsp {

namespace {

using ValuePair = std::pair<ExactScalar, ExactScalar>;

SuiteCase mk(std::string suite, std::string id, std::uint64_t seed, std::vector<int> sizes,
             std::function<ValuePair()> fn) {
  SuiteCase c;
  c.suite = std::move(suite);
  c.id = std::move(id);
  c.seed = seed;
  c.sizes = std::move(sizes);
  c.run = [fn = std::move(fn)]() {
    auto [l, r] = fn();
    return std::make_pair(l.str(), r.str());
  };
  return c;
}

// ---------------------------------------------------------------- kernel ---

void add_kernel_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  std::vector<ExactScalar> qs{opt.q};
  if (!(opt.q == ExactScalar(3, 2))) qs.push_back(ExactScalar(3, 2));
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    QContext<ExactScalar> ctx(qs[qi]);
    RatSampler smp(opt.seed + qi, opt.bound, ctx);
    for (int i = 0; i < 50; ++i) {
      smp.reset_pool();
      ExactScalar x = smp.draw(), y = smp.draw();
      auto tag = [&](const char* rel) {
        return "q" + qs[qi].str() + "-pt" + std::to_string(i) + "-" + rel;
      };
      auto add = [&](const char* rel, std::function<ValuePair()> fn) {
        cases.push_back(mk("kernel", tag(rel), opt.seed + qi, {}, std::move(fn)));
      };
      add("h-shift", [x, y, ctx] {
        return ValuePair{kfun(Kern::h, x * ctx.qm2(), y, ctx),
                         ctx.qinv / kfun(Kern::g, x, y, ctx)};
      });
      add("g-shift", [x, y, ctx] {
        return ValuePair{kfun(Kern::g, x, y * ctx.qm2(), ctx),
                         ctx.q / kfun(Kern::h, x, y, ctx)};
      });
      add("g-contact", [x, ctx] {
        return ValuePair{kfun(Kern::g, x * ctx.qm2(), x, ctx), -ctx.q / x};
      });
      add("t-shift-x", [x, y, ctx] {
        return ValuePair{kfun(Kern::t, x * ctx.qm2(), y, ctx),
                         ctx.q2() * kfun(Kern::t, y, x, ctx)};
      });
      add("t-shift-y", [x, y, ctx] {
        return ValuePair{kfun(Kern::t, x, y * ctx.q2(), ctx),
                         ctx.qm2() * kfun(Kern::t, y, x, ctx)};
      });
      add("f-shift", [x, y, ctx] {
        return ValuePair{kfun(Kern::f, x * ctx.qm2(), y, ctx),
                         ExactScalar(1) / kfun(Kern::f, y, x, ctx)};
      });
      add("h=f/g", [x, y, ctx] {
        return ValuePair{kfun(Kern::h, x, y, ctx),
                         kfun(Kern::f, x, y, ctx) / kfun(Kern::g, x, y, ctx)};
      });
      add("t=g/h", [x, y, ctx] {
        return ValuePair{kfun(Kern::t, x, y, ctx),
                         kfun(Kern::g, x, y, ctx) / kfun(Kern::h, x, y, ctx)};
      });
      add("g-antisym", [x, y, ctx] {
        return ValuePair{kfun(Kern::g, x, y, ctx), -kfun(Kern::g, y, x, ctx)};
      });
      add("h-diagonal", [x, ctx] { return ValuePair{kfun(Kern::h, x, x, ctx), x}; });
    }
  }
}

// --------------------------------------------------------------- izergin ---

void add_izergin_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (Branch br : {Branch::L, Branch::R}) {
      const char* bn = br == Branch::L ? "l" : "r";
      // reduction property
      for (int n = 0; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
          RatSampler smp(seed * 131 + static_cast<std::uint64_t>(n * 4 + m), opt.bound, ctx);
          auto xb = smp.draw_set(static_cast<std::size_t>(n));
          auto yb = smp.draw_set(static_cast<std::size_t>(n));
          auto zb = smp.draw_set(static_cast<std::size_t>(m));
          auto id = std::string("kred-") + bn + "-n" + std::to_string(n) + "m" +
                    std::to_string(m) + "-s" + std::to_string(t);
          KVariant v = variant_same(br);
          long e = branch_sign(br) * static_cast<long>(m);
          cases.push_back(mk("izergin", id + "-a", seed, {n, m}, [=] {
            ExactScalar lhs = izergin(concat(xb, scale_set(zb, ctx.qm2())), concat(yb, zb), v, ctx);
            ExactScalar rhs = pow_int(-ctx.q, e) * izergin(xb, yb, v, ctx);
            return ValuePair{lhs, rhs};
          }));
          cases.push_back(mk("izergin", id + "-b", seed, {n, m}, [=] {
            ExactScalar lhs = izergin(concat(xb, zb), concat(yb, scale_set(zb, ctx.q2())), v, ctx);
            ExactScalar rhs = pow_int(-ctx.q, e) * izergin(xb, yb, v, ctx);
            return ValuePair{lhs, rhs};
          }));
        }
      // inversion property
      for (int n = 0; n <= 4; ++n) {
        RatSampler smp(seed * 137 + static_cast<std::uint64_t>(n), opt.bound, ctx);
        auto xb = smp.draw_set(static_cast<std::size_t>(n));
        auto yb = smp.draw_set(static_cast<std::size_t>(n));
        auto id = std::string("kinv-") + bn + "-n" + std::to_string(n) + "-s" + std::to_string(t);
        KVariant v = variant_same(br);
        KVariant vo = variant_opposite(br);
        long e = branch_sign(br) * static_cast<long>(n);
        cases.push_back(mk("izergin", id + "-a", seed, {n}, [=] {
          ExactScalar lhs = izergin(scale_set(xb, ctx.qm2()), yb, v, ctx);
          ExactScalar rhs = pow_int(-ctx.q, e) / kfun_prod(Kern::f, yb, xb, ctx) *
                            izergin(yb, xb, vo, ctx);
          return ValuePair{lhs, rhs};
        }));
        cases.push_back(mk("izergin", id + "-b", seed, {n}, [=] {
          ExactScalar lhs = izergin(xb, scale_set(yb, ctx.q2()), v, ctx);
          ExactScalar rhs = pow_int(-ctx.q, e) / kfun_prod(Kern::f, yb, xb, ctx) *
                            izergin(yb, xb, vo, ctx);
          return ValuePair{lhs, rhs};
        }));
      }
      // residue at the coinciding pair, via the symbolic slot
      for (int n = 0; n <= 3; ++n) {
        RatSampler smp(seed * 139 + static_cast<std::uint64_t>(n), opt.bound, ctx);
        auto xb = smp.draw_set(static_cast<std::size_t>(n));
        auto yb = smp.draw_set(static_cast<std::size_t>(n));
        ExactScalar z = smp.draw();
        auto id = std::string("kres-") + bn + "-n" + std::to_string(n) + "-s" + std::to_string(t);
        KVariant v = variant_same(br);
        cases.push_back(mk("izergin", id, seed, {n}, [=] {
          auto X = concat(xb, VarSet<ExactScalar>{z});
          auto Y = concat(yb, VarSet<ExactScalar>{ExactScalar(0)});  // slot placeholder
          RatFun sym = izergin_symbolic(X, Y, v, true, Y.size() - 1, ctx);
          ExactScalar lhs = ratfun_residue(sym, z);
          // residue of the factorized pole term, all via exact limits
          QContext<RatFun> rctx{RatFun(ctx.q)};
          RatFun polar = (RatFun::variable() - RatFun(z)) *
                         kfun(Kern::f, RatFun(z), RatFun::variable(), rctx);
          ExactScalar rhs = ratfun_limit(polar, z) * kfun_prod1(Kern::f, z, yb, ctx) *
                            kfun_prod2(Kern::f, xb, z, ctx) * izergin(xb, yb, v, ctx);
          return ValuePair{lhs, rhs};
        }));
      }
      // block form of the shifted determinant (all splits)
      for (int m = 1; m <= 4; ++m) {
        RatSampler smp(seed * 149 + static_cast<std::uint64_t>(m), opt.bound, ctx);
        auto gamma = smp.draw_set(static_cast<std::size_t>(m));
        auto xi = smp.draw_set(static_cast<std::size_t>(m));
        for (int nI = 0; nI <= m; ++nI) {
          const int sizes[] = {nI, m - nI};
          int pi = 0;
          for (const auto& blk : enum_partitions(m, sizes)) {
            auto gI = subset(gamma, blk[0]);
            auto gII = subset(gamma, blk[1]);
            auto id = std::string("kshift2-") + bn + "-m" + std::to_string(m) + "n" +
                      std::to_string(nI) + "p" + std::to_string(pi++) + "-s" + std::to_string(t);
            cases.push_back(mk("izergin", id, seed, {m, nI}, [=] {
              ExactScalar lhs = izergin(concat(scale_set(gI, ctx.qm2()), gII), xi,
                                        variant_same(br), ctx) *
                                kfun_prod(Kern::f, gII, gI, ctx) *
                                kfun_prod(Kern::f, xi, gI, ctx);
              const ExactScalar pfac = br == Branch::L ? pprod(gamma) : pprod(xi);
              const ExactScalar qpm = br == Branch::L ? ctx.qinv : ctx.q;
              const ExactScalar msign = m % 2 == 0 ? ExactScalar(1) : ExactScalar(-1);
              std::vector<std::vector<ExactScalar>> mat(
                  static_cast<std::size_t>(m), std::vector<ExactScalar>(static_cast<std::size_t>(m)));
              for (int j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < gI.size(); ++k)
                  mat[static_cast<std::size_t>(j)][k] =
                      msign * qpm * kfun(Kern::t, xi[static_cast<std::size_t>(j)], gI[k], ctx) *
                      kfun_prod2(Kern::h, xi, gI[k], ctx);
                for (std::size_t k = 0; k < gII.size(); ++k)
                  mat[static_cast<std::size_t>(j)][gI.size() + k] =
                      kfun(Kern::t, gII[k], xi[static_cast<std::size_t>(j)], ctx) *
                      kfun_prod1(Kern::h, gII[k], xi, ctx);
              }
              ExactScalar rhs = pfac * delta(DeltaKind::Prime, xi, ctx) *
                                delta(DeltaKind::Plain, gI, ctx) *
                                delta(DeltaKind::Plain, gII, ctx) *
                                kfun_prod(Kern::g, gII, gI, ctx) * det_field(mat);
              return ValuePair{lhs, rhs};
            }));
          }
        }
      }
    }
    // symmetry in both argument sets
    {
      RatSampler smp(seed * 151, opt.bound, ctx);
      auto xb = smp.draw_set(3);
      auto yb = smp.draw_set(3);
      VarSet<ExactScalar> xp{xb[2], xb[0], xb[1]};
      VarSet<ExactScalar> yp{yb[1], yb[2], yb[0]};
      cases.push_back(mk("izergin", "perm-s" + std::to_string(t), seed, {3}, [=] {
        return ValuePair{izergin(xb, yb, KVariant::Plain, ctx),
                         izergin(xp, yp, KVariant::Plain, ctx)};
      }));
    }
  }
}

// ---------------------------------------------------------------- lemmas ---

void add_lemma_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (Branch br : {Branch::L, Branch::R}) {
      const char* bn = br == Branch::L ? "l" : "r";
      for (int m1 = 0; m1 <= 5; ++m1)
        for (int m2 = 0; m1 + m2 <= 5; ++m2) {
          RatSampler smp(seed * 157 + static_cast<std::uint64_t>(m1 * 8 + m2), opt.bound, ctx);
          auto gamma = smp.draw_set(static_cast<std::size_t>(m1 + m2));
          auto alpha = smp.draw_set(static_cast<std::size_t>(m1));
          auto beta = smp.draw_set(static_cast<std::size_t>(m2));
          auto id = std::string("lemma1-") + bn + "-m" + std::to_string(m1) +
                    std::to_string(m2) + "-s" + std::to_string(t);
          cases.push_back(mk("lemmas", id, seed, {m1, m2},
                             [=] { return lemma1(gamma, alpha, beta, br, ctx); }));
        }
      for (int m = 1; m <= 4; ++m) {
        RatSampler smp(seed * 163 + static_cast<std::uint64_t>(m), opt.bound, ctx);
        auto gamma = smp.draw_set(static_cast<std::size_t>(m));
        auto xi = smp.draw_set(static_cast<std::size_t>(m));
        PhiTable phi1, phi2;
        for (int i = 0; i < m; ++i) {
          phi1.push_back(smp.draw());
          phi2.push_back(smp.draw());
        }
        auto id = std::string("lemma2-") + bn + "-m" + std::to_string(m) + "-s" +
                  std::to_string(t);
        cases.push_back(mk("lemmas", id, seed, {m},
                           [=] { return lemma2(gamma, xi, phi1, phi2, br, ctx); }));
        PhiTable zero(static_cast<std::size_t>(m), ExactScalar(0));
        cases.push_back(mk("lemmas", id + "-phi1zero", seed, {m},
                           [=] { return lemma2(gamma, xi, zero, phi2, br, ctx); }));
        cases.push_back(mk("lemmas", id + "-phi2zero", seed, {m},
                           [=] { return lemma2(gamma, xi, phi1, zero, br, ctx); }));
      }
    }
    for (int n = 0; n <= 4; ++n) {
      RatSampler smp(seed * 167 + static_cast<std::uint64_t>(n), opt.bound, ctx);
      auto alpha = smp.draw_set(static_cast<std::size_t>(n));
      auto beta = smp.draw_set(static_cast<std::size_t>(n));
      ExactScalar z = smp.draw();
      cases.push_back(mk("lemmas", "lemma3-n" + std::to_string(n) + "-s" + std::to_string(t),
                         seed, {n}, [=] { return lemma3(alpha, beta, z, ctx); }));
      for (auto [which, wn] : {std::pair{Corollary::C1a, "1a"}, {Corollary::C1b, "1b"},
                               {Corollary::C2a, "2a"}, {Corollary::C2b, "2b"},
                               {Corollary::C3, "3"}}) {
        cases.push_back(mk("lemmas",
                           std::string("cor") + wn + "-n" + std::to_string(n) + "-s" +
                               std::to_string(t),
                           seed, {n}, [=, w = which] { return corollary(w, alpha, beta, ctx); }));
      }
    }
    {
      RatSampler smp(seed * 173, opt.bound, ctx);
      auto alpha = smp.draw_set(2);
      auto beta = smp.draw_set(2);
      cases.push_back(mk("lemmas", "trivrav-s" + std::to_string(t), seed, {2}, [=] {
        VarSet<ExactScalar> aI{alpha[0]}, aII{alpha[1]}, bI{beta[0]}, bII{beta[1]};
        return triv_rav_term(aI, aII, bI, bII, alpha, beta, ctx);
      }));
    }
    // block-determinant expansion with kernel-built rows
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        RatSampler smp(seed * 179 + static_cast<std::uint64_t>(a * 4 + b), opt.bound, ctx);
        auto p1 = smp.draw_set(static_cast<std::size_t>(a));
        auto p2 = smp.draw_set(static_cast<std::size_t>(a));
        auto s1 = smp.draw_set(static_cast<std::size_t>(b));
        auto s2 = smp.draw_set(static_cast<std::size_t>(b));
        auto xb = smp.draw_set(static_cast<std::size_t>(a + b));
        RowGen block1 = [p1, p2, ctx](std::size_t j, const ExactScalar& x) {
          return kfun(Kern::t, p1[j], x, ctx) + kfun(Kern::f, x, p2[j], ctx);
        };
        RowGen block2 = [s1, s2, ctx](std::size_t j, const ExactScalar& x) {
          return kfun(Kern::g, s1[j], x, ctx) * kfun(Kern::h, x, s2[j], ctx);
        };
        cases.push_back(mk("lemmas",
                           "genmat-a" + std::to_string(a) + "b" + std::to_string(b) + "-s" +
                               std::to_string(t),
                           seed, {a, b}, [=] {
                             return genmat(block1, static_cast<std::size_t>(a), block2,
                                           static_cast<std::size_t>(b), xb, ctx);
                           }));
      }
  }
  // permutation sign against combinatorial parity, sets up to size 6
  {
    RatSampler smp(opt.seed * 181, opt.bound, ctx);
    auto pool6 = smp.draw_set(6);
    for (int n = 1; n <= 6; ++n) {
      VarSet<ExactScalar> origin(pool6.begin(), pool6.begin() + n);
      for (int k = 0; k <= n; ++k) {
        const int sizes[] = {k, n - k};
        int pi = 0;
        for (const auto& blk : enum_partitions(n, sizes)) {
          auto first = subset(origin, blk[0]);
          auto second = subset(origin, blk[1]);
          int parity = split_parity(blk[0], blk[1]);
          cases.push_back(mk("lemmas",
                             "permsign-n" + std::to_string(n) + "k" + std::to_string(k) + "p" +
                                 std::to_string(pi++),
                             opt.seed, {n, k}, [=] {
                               return ValuePair{partition_sign(first, second, origin, ctx),
                                                ExactScalar(parity)};
                             }));
        }
      }
    }
  }
}

// -------------------------------------------------------------- appendix ---

void add_appendix_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (int n = 0; n <= 4; ++n) {
      RatSampler smp(seed * 191 + static_cast<std::uint64_t>(n), opt.bound, ctx);
      auto alpha = smp.draw_set(static_cast<std::size_t>(n));
      auto beta = smp.draw_set(static_cast<std::size_t>(n));
      ExactScalar z = smp.draw();
      cases.push_back(mk("appendix", "lambda-lr-n" + std::to_string(n) + "-s" + std::to_string(t),
                         seed, {n}, [=] { return lambda_pair(alpha, beta, z, ctx); }));
      if (n >= 1 && n <= 3) {
        cases.push_back(mk("appendix",
                           "lambda-refold-n" + std::to_string(n) + "-s" + std::to_string(t), seed,
                           {n}, [=] {
                             auto [lhs, rhs] = lemma3(alpha, beta, z, ctx);
                             (void)rhs;
                             return ValuePair{lhs, lambda_l(alpha, beta, z, ctx)};
                           }));
        for (auto [which, wn] :
             {std::pair{LambdaResidue::LAtBeta, "l-at-beta"},
              {LambdaResidue::LAtBetaQm2, "l-at-betaqm2"},
              {LambdaResidue::RAtBeta, "r-at-beta"},
              {LambdaResidue::RAtBetaQm2, "r-at-betaqm2"}}) {
          cases.push_back(mk("appendix",
                             std::string("lambda-res-") + wn + "-n" + std::to_string(n) + "-s" +
                                 std::to_string(t),
                             seed, {n}, [=, w = which] {
                               return lambda_residue_check(alpha, beta, z, w, ctx);
                             }));
        }
      }
    }
    {
      RatSampler smp(seed * 193, opt.bound, ctx);
      auto alpha = smp.draw_set(2);
      auto beta = smp.draw_set(2);
      ExactScalar z = smp.draw();
      cases.push_back(mk("appendix", "lambda-res-l-eq-r-s" + std::to_string(t), seed, {2}, [=] {
        auto l = lambda_residue_check(alpha, beta, z, LambdaResidue::LAtBeta, ctx);
        auto r = lambda_residue_check(alpha, beta, z, LambdaResidue::RAtBeta, ctx);
        return ValuePair{l.first, r.first};
      }));
    }
  }
}

// -------------------------------------------------------- highest coeff ----

void add_hc_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (Branch br : {Branch::L, Branch::R})
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          RatSampler smp(seed * 197 + static_cast<std::uint64_t>(a * 4 + b), opt.bound, ctx);
          auto tb = smp.draw_set(static_cast<std::size_t>(a));
          auto xb = smp.draw_set(static_cast<std::size_t>(a));
          auto sb = smp.draw_set(static_cast<std::size_t>(b));
          auto yb = smp.draw_set(static_cast<std::size_t>(b));
          auto id = std::string("hc-") + (br == Branch::L ? "l" : "r") + "-a" +
                    std::to_string(a) + "b" + std::to_string(b) + "-s" + std::to_string(t);
          cases.push_back(mk("hc", id, seed, {a, b}, [=] {
            return ValuePair{highest_coeff(br, tb, xb, sb, yb, 1, ctx),
                             highest_coeff(br, tb, xb, sb, yb, 2, ctx)};
          }));
        }
  }
}

// ----------------------------------------------------------------- props ---

void add_props_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  static const std::pair<int, int> grid[] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1},
                                             {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  const ExactScalar k2s[] = {ExactScalar(1), opt.kappa2};
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (int w = 0; w < 2; ++w) {  // 0: S1, 1: Sq2
      DetWhich which = w == 0 ? DetWhich::S1 : DetWhich::Sq2;
      for (const ExactScalar& k2 : k2s) {
        for (auto [a, b] : grid) {
          if (a > opt.max_a || b > opt.max_b) continue;
          RatSampler smp(seed * 211 + static_cast<std::uint64_t>(w * 400 + a * 16 + b * 2) +
                             (k2 == ExactScalar(1) ? 0u : 1u),
                         opt.bound, ctx);
          auto uC = smp.draw_set(static_cast<std::size_t>(a));
          auto vC = smp.draw_set(static_cast<std::size_t>(b));
          auto uB = smp.draw_set(static_cast<std::size_t>(a));
          auto vB = smp.draw_set(static_cast<std::size_t>(b));
          Twist kappa{ExactScalar(1), k2, w == 0 ? ExactScalar(1) : ctx.q2()};
          auto id = std::string(w == 0 ? "prop1" : "prop2") + "-a" + std::to_string(a) + "b" +
                    std::to_string(b) + "-k" + k2.str() + "-s" + std::to_string(t);
          cases.push_back(mk("props", id + "-sum-vs-det", seed, {a, b}, [=] {
            auto cfg = make_onshell_config(uC, vC, uB, vB, kappa, ctx);
            return ValuePair{scalar_sum(cfg), scalar_det(cfg, which)};
          }));
          cases.push_back(mk("props", id + "-int-vs-det", seed, {a, b}, [=] {
            auto cfg = make_onshell_config(uC, vC, uB, vB, kappa, ctx);
            return ValuePair{scalar_intermediate(cfg), scalar_det(cfg, which)};
          }));
        }
      }
    }
    // G^(kappa) closed forms at the two special ratios
    for (int nI = 0; nI <= 3; ++nI) {
      RatSampler smp(seed * 223 + static_cast<std::uint64_t>(nI), opt.bound, ctx);
      auto uBI = smp.draw_set(static_cast<std::size_t>(nI));
      auto vCI = smp.draw_set(static_cast<std::size_t>(nI));
      cases.push_back(mk("props", "gkappa1-n" + std::to_string(nI) + "-s" + std::to_string(t),
                         seed, {nI}, [=] {
                           Twist kap{ExactScalar(1), ExactScalar(1), ExactScalar(1)};
                           return ValuePair{g_kappa_sum(uBI, vCI, kap, ctx),
                                            g_kappa_closed(uBI, vCI, DetWhich::S1, ctx)};
                         }));
      cases.push_back(mk("props", "gkappaq2-n" + std::to_string(nI) + "-s" + std::to_string(t),
                         seed, {nI}, [=] {
                           Twist kap{ExactScalar(1), ExactScalar(1), ctx.q2()};
                           return ValuePair{g_kappa_sum(uBI, vCI, kap, ctx),
                                            g_kappa_closed(uBI, vCI, DetWhich::Sq2, ctx)};
                         }));
    }
  }
}

// ---------------------------------------------------------------- limits ---

VarSet<ExactScalar> draw_slopes(std::uint64_t seed, std::size_t n, long bound,
                                const ExactScalar& c, std::vector<ExactScalar>& pool) {
  // slopes guard: pairwise differences stay away from {0, +-c, +-2c}
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  VarSet<ExactScalar> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw input_error("draw_slopes: guard failed");
      ExactScalar s(uniform(0, 1) ? uniform(1, bound) : -uniform(1, bound), uniform(1, bound));
      bool ok = !s.is_zero();
      for (const auto& p : pool) {
        ExactScalar d = s - p;
        if (d.is_zero() || d == c || d == -c || d == c * ExactScalar(2) ||
            d == -(c * ExactScalar(2)))
          ok = false;
      }
      if (ok) {
        pool.push_back(s);
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

void add_limits_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  const ExactScalar c(2);
  // kernel scaling limits at 20 points
  {
    std::vector<ExactScalar> pool;
    for (int i = 0; i < 20; ++i) {
      auto pts = draw_slopes(opt.seed * 227 + static_cast<std::uint64_t>(i), 2, opt.bound, c, pool);
      pool.clear();
      pool = {pts[0], pts[1]};
      for (auto [k, kn] : {std::pair{Kern::f, "f"}, {Kern::g, "g"}, {Kern::h, "h"},
                           {Kern::t, "t"}}) {
        cases.push_back(mk("limits",
                           std::string("q1-kernel-") + kn + "-pt" + std::to_string(i), opt.seed,
                           {}, [=, kk = k] {
                             RatFun sub = scaling_substitute(kk, pts[0], pts[1], c);
                             return ValuePair{ratfun_limit(sub, ExactScalar(0)),
                                              kfun_invariant(kk, pts[0], pts[1], c)};
                           }));
      }
      pool.clear();
    }
  }
  // full scalar-product scaling limits
  {
    static const std::pair<int, int> sizes[] = {{1, 0}, {0, 1}, {1, 1}};
    for (auto [a, b] : sizes) {
      std::vector<ExactScalar> pool;
      auto uCp = draw_slopes(opt.seed * 229 + static_cast<std::uint64_t>(a * 2 + b),
                             static_cast<std::size_t>(a), opt.bound, c, pool);
      auto vCp = draw_slopes(opt.seed * 229 + static_cast<std::uint64_t>(a * 2 + b) + 101,
                             static_cast<std::size_t>(b), opt.bound, c, pool);
      auto uBp = draw_slopes(opt.seed * 229 + static_cast<std::uint64_t>(a * 2 + b) + 203,
                             static_cast<std::size_t>(a), opt.bound, c, pool);
      auto vBp = draw_slopes(opt.seed * 229 + static_cast<std::uint64_t>(a * 2 + b) + 307,
                             static_cast<std::size_t>(b), opt.bound, c, pool);
      auto id = "q1-scalar-a" + std::to_string(a) + "b" + std::to_string(b);
      const ExactScalar k2 = opt.kappa2;
      cases.push_back(mk("limits", id + "-s1-vs-sq2", opt.seed, {a, b}, [=] {
        auto lim = scaling_limit_scalar(uCp, vCp, uBp, vBp, c, k2);
        return ValuePair{lim.s1, lim.sq2};
      }));
      cases.push_back(mk("limits", id + "-s1-vs-invariant", opt.seed, {a, b}, [=] {
        auto lim = scaling_limit_scalar(uCp, vCp, uBp, vBp, c, k2);
        return ValuePair{lim.s1, lim.invariant};
      }));
    }
  }
  // diagonal-entry limits
  {
    static const std::pair<int, int> usizes[] = {{1, 0}, {2, 1}};
    static const std::pair<int, int> vsizes[] = {{0, 1}, {1, 2}};
    for (const ExactScalar& k2 : {ExactScalar(1), opt.kappa2}) {
      Twist kappa{ExactScalar(1), k2, ExactScalar(1)};
      for (auto [a, b] : usizes) {
        RatSampler smp(opt.seed * 233 + static_cast<std::uint64_t>(a * 8 + b), opt.bound, ctx);
        auto uC = smp.draw_set(static_cast<std::size_t>(a));
        auto vC = smp.draw_set(static_cast<std::size_t>(b));
        auto uB = smp.draw_set(static_cast<std::size_t>(a));
        auto vB = smp.draw_set(static_cast<std::size_t>(b));
        uB.back() = uC.back();  // designated coincident pair
        ExactScalar rp = smp.draw();
        cases.push_back(mk("limits",
                           "diag-u-a" + std::to_string(a) + "b" + std::to_string(b) + "-k" +
                               k2.str(),
                           opt.seed, {a, b}, [=] {
                             auto r = entry_limit_check(uC, vC, uB, vB, EntryPair::U, kappa, rp,
                                                        ctx);
                             return ValuePair{r.limit, r.closed};
                           }));
      }
      for (auto [a, b] : vsizes) {
        RatSampler smp(opt.seed * 239 + static_cast<std::uint64_t>(a * 8 + b), opt.bound, ctx);
        auto uC = smp.draw_set(static_cast<std::size_t>(a));
        auto vC = smp.draw_set(static_cast<std::size_t>(b));
        auto uB = smp.draw_set(static_cast<std::size_t>(a));
        auto vB = smp.draw_set(static_cast<std::size_t>(b));
        vC.back() = vB.back();
        ExactScalar rp = smp.draw();
        cases.push_back(mk("limits",
                           "diag-v-a" + std::to_string(a) + "b" + std::to_string(b) + "-k" +
                               k2.str(),
                           opt.seed, {a, b}, [=] {
                             auto r = entry_limit_check(uC, vC, uB, vB, EntryPair::V, kappa, rp,
                                                        ctx);
                             return ValuePair{r.limit, r.closed};
                           }));
      }
    }
  }
}

// ------------------------------------------------------------ formfactor ---

void add_formfactor_cases(std::vector<SuiteCase>& cases, const SuiteOptions& opt) {
  QContext<ExactScalar> ctx(opt.q);
  const ExactScalar k2 = opt.kappa2 == ExactScalar(1) ? ExactScalar(5, 3) : opt.kappa2;
  for (int t = 0; t < opt.trials; ++t) {
    const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
    for (int a = 0; a <= std::min(opt.max_a, 2); ++a)
      for (int b = 0; b <= std::min(opt.max_b, 2); ++b) {
        RatSampler smp(seed * 241 + static_cast<std::uint64_t>(a * 4 + b), opt.bound, ctx);
        auto uC = smp.draw_set(static_cast<std::size_t>(a));
        auto vC = smp.draw_set(static_cast<std::size_t>(b));
        auto uB = smp.draw_set(static_cast<std::size_t>(a));
        auto vB = smp.draw_set(static_cast<std::size_t>(b));
        ExactScalar z = smp.draw();
        ExactScalar r1z = smp.draw();
        ExactScalar r3z = smp.draw();
        auto sz = "-a" + std::to_string(a) + "b" + std::to_string(b) + "-s" + std::to_string(t);
        cases.push_back(mk("formfactor", "ff22tw-det-vs-sum" + sz, seed, {a, b}, [=] {
          Twist kap{ExactScalar(1), k2, ExactScalar(1)};
          FormFactorRequest req{FFWhich::FF22_twisted, z,
                                make_onshell_config(uC, vC, uB, vB, kap, ctx, z, r1z, r3z)};
          return ValuePair{twisted_ff(req, FFRoute::Det), twisted_ff(req, FFRoute::Sum)};
        }));
        cases.push_back(mk("formfactor", "ff33q2-det-vs-sum" + sz, seed, {a, b}, [=] {
          Twist kap{ExactScalar(1), ExactScalar(1), ctx.q2()};
          FormFactorRequest req{FFWhich::FF33_q2, z,
                                make_onshell_config(uC, vC, uB, vB, kap, ctx, z, r1z, r3z)};
          return ValuePair{twisted_ff(req, FFRoute::Det), twisted_ff(req, FFRoute::Sum)};
        }));
        cases.push_back(mk("formfactor", "ff22-interp-vs-deriv" + sz, seed, {a, b}, [=] {
          return ValuePair{ff22(uC, vC, uB, vB, z, r1z, r3z, ctx, FF22Route::Interpolation),
                           ff22(uC, vC, uB, vB, z, r1z, r3z, ctx, FF22Route::RowDerivative)};
        }));
      }
    // T12 twisted form factor: permutation invariance at a=1, b=2
    {
      RatSampler smp(seed * 251, opt.bound, ctx);
      auto uC = smp.draw_set(2);  // a+1
      auto vC = smp.draw_set(2);
      auto uB = smp.draw_set(1);
      auto vB = smp.draw_set(2);
      ExactScalar z = smp.draw();
      ExactScalar r1z = smp.draw();
      ExactScalar r3z = smp.draw();
      Twist kap{ExactScalar(1), k2, ctx.q};
      cases.push_back(mk("formfactor", "ff12-perm-uC-s" + std::to_string(t), seed, {1, 2}, [=] {
        auto cfg = make_onshell_config(uC, vC, uB, vB, kap, ctx, z, r1z, r3z);
        VarSet<ExactScalar> uCp{uC[1], uC[0]};
        auto cfgp = make_onshell_config(uCp, vC, uB, vB, kap, ctx, z, r1z, r3z);
        return ValuePair{ff12_twisted(z, cfg), ff12_twisted(z, cfgp)};
      }));
      cases.push_back(mk("formfactor", "ff12-perm-vB-s" + std::to_string(t), seed, {1, 2}, [=] {
        auto cfg = make_onshell_config(uC, vC, uB, vB, kap, ctx, z, r1z, r3z);
        VarSet<ExactScalar> vBp{vB[1], vB[0]};
        auto cfgp = make_onshell_config(uC, vC, uB, vBp, kap, ctx, z, r1z, r3z);
        return ValuePair{ff12_twisted(z, cfg), ff12_twisted(z, cfgp)};
      }));
    }
  }
  // vacuum values and pinned regression constants (q = 2 conventions)
  {
    RatSampler smp(opt.seed * 257, opt.bound, ctx);
    ExactScalar z = smp.draw();
    ExactScalar r1z = smp.draw();
    ExactScalar r3z = smp.draw();
    cases.push_back(mk("formfactor", "ff22tw-vacuum", opt.seed, {0, 0}, [=] {
      Twist kap{ExactScalar(1), k2, ExactScalar(1)};
      FormFactorRequest req{FFWhich::FF22_twisted, z,
                            make_onshell_config<ExactScalar>({}, {}, {}, {}, kap, ctx, z, r1z,
                                                             r3z)};
      return ValuePair{twisted_ff(req, FFRoute::Det), ExactScalar(1)};
    }));
    cases.push_back(mk("formfactor", "ff33q2-vacuum", opt.seed, {0, 0}, [=] {
      Twist kap{ExactScalar(1), ExactScalar(1), ctx.q2()};
      FormFactorRequest req{FFWhich::FF33_q2, z,
                            make_onshell_config<ExactScalar>({}, {}, {}, {}, kap, ctx, z, r1z,
                                                             r3z)};
      return ValuePair{twisted_ff(req, FFRoute::Det), r3z};
    }));
    cases.push_back(mk("formfactor", "ff22-vacuum", opt.seed, {0, 0}, [=] {
      return ValuePair{ff22({}, {}, {}, {}, z, r1z, r3z, ctx, FF22Route::Interpolation),
                       ExactScalar(1)};
    }));
    if (opt.q == ExactScalar(2)) {
      cases.push_back(mk("formfactor", "ff12-vacuum-regression", opt.seed, {0, 0}, [ctx] {
        Twist kap{ExactScalar(1), ExactScalar(5, 3), ctx.q};
        auto cfg = make_onshell_config<ExactScalar>({ExactScalar(3)}, {}, {}, {}, kap, ctx,
                                                    ExactScalar(7), ExactScalar(4, 5),
                                                    ExactScalar(1));
        return ValuePair{ff12_twisted(ExactScalar(7), cfg), ExactScalar(91, 40)};
      }));
    }
  }
}

}  // namespace

std::vector<VerificationReport> execute_cases(std::vector<SuiteCase> cases, int threads) {
  if (threads < 1) threads = 1;
  std::vector<VerificationReport> reports(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      const SuiteCase& c = cases[i];
      VerificationReport r;
      r.suite = c.suite;
      r.case_id = c.id;
      r.seed = c.seed;
      r.sizes = c.sizes;
      auto start = std::chrono::steady_clock::now();
      try {
        auto [lhs, rhs] = c.run();
        r.lhs = lhs;
        r.rhs = rhs;
        r.status = lhs == rhs ? "pass" : "fail";
      } catch (const error& e) {
        r.status = "error";
        r.detail = e.what();
      } catch (const std::exception& e) {
        r.status = "error";
        r.detail = std::string("unexpected: ") + e.what();
      }
      r.time_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
      reports[i] = std::move(r);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kernel", "izergin", "lemmas",    "appendix",
                                              "hc",     "props",   "limits",    "formfactor"};
  return names;
}

std::vector<SuiteCase> build_suite(const std::string& name, const SuiteOptions& opt) {
  std::vector<SuiteCase> cases;
  if (name == "kernel" || name == "all") add_kernel_cases(cases, opt);
  if (name == "izergin" || name == "all") add_izergin_cases(cases, opt);
  if (name == "lemmas" || name == "all") add_lemma_cases(cases, opt);
  if (name == "appendix" || name == "all") add_appendix_cases(cases, opt);
  if (name == "hc" || name == "all") add_hc_cases(cases, opt);
  if (name == "props" || name == "all") add_props_cases(cases, opt);
  if (name == "limits" || name == "all") add_limits_cases(cases, opt);
  if (name == "formfactor" || name == "all") add_formfactor_cases(cases, opt);
  if (cases.empty() && name != "all")
    throw input_error("unknown suite: " + name);
  return cases;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  return execute_cases(build_suite(name, opt), opt.threads);
}

}  // namespace qsp
