#include "qsp/identities.hpp"

namespace qsp {

namespace {

ExactScalar phi_prod(const PhiTable& phi, std::span<const int> idx) {
  ExactScalar acc(1);
  for (int i : idx) acc *= phi[static_cast<std::size_t>(i)];
  return acc;
}

}  // namespace

LhsRhs<ExactScalar> lemma1(const VarSet<ExactScalar>& gamma, const VarSet<ExactScalar>& alpha,
                           const VarSet<ExactScalar>& beta, Branch br,
                           const QContext<ExactScalar>& ctx) {
  const int m1 = static_cast<int>(alpha.size());
  const int m2 = static_cast<int>(beta.size());
  if (static_cast<int>(gamma.size()) != m1 + m2)
    throw input_error("lemma1: #gamma must equal #alpha + #beta");
  ExactScalar lhs(0);
  const int sizes[] = {m1, m2};
  for_each_partition(m1 + m2, sizes, [&](const Blocks& blk) {
    VarSet<ExactScalar> gI = subset(gamma, blk[0]), gII = subset(gamma, blk[1]);
    lhs += izergin(gI, alpha, variant_same(br), ctx) *
           izergin(beta, gII, variant_opposite(br), ctx) * kfun_prod(Kern::f, gII, gI, ctx);
  });
  ExactScalar rhs = pow_int(-ctx.q, branch_sign(br) * static_cast<long>(m1)) *
                    kfun_prod(Kern::f, gamma, alpha, ctx) *
                    izergin(concat(scale_set(alpha, ctx.qm2()), beta), gamma,
                            variant_opposite(br), ctx);
  return {lhs, rhs};
}

LhsRhs<ExactScalar> lemma2(const VarSet<ExactScalar>& gamma, const VarSet<ExactScalar>& xi,
                           const PhiTable& phi1, const PhiTable& phi2, Branch br,
                           const QContext<ExactScalar>& ctx) {
  const int m = static_cast<int>(gamma.size());
  if (static_cast<int>(xi.size()) != m) throw input_error("lemma2: #gamma must equal #xi");
  if (phi1.size() != gamma.size() || phi2.size() != gamma.size())
    throw input_error("lemma2: phi tables must be defined on exactly the gamma points");

  ExactScalar lhs(0);
  for (int k = 0; k <= m; ++k) {
    const int sizes[] = {k, m - k};
    for_each_partition(m, sizes, [&](const Blocks& blk) {
      VarSet<ExactScalar> gI = subset(gamma, blk[0]), gII = subset(gamma, blk[1]);
      lhs += izergin(concat(scale_set(gI, ctx.qm2()), gII), xi, variant_same(br), ctx) *
             kfun_prod(Kern::f, xi, gI, ctx) * kfun_prod(Kern::f, gII, gI, ctx) *
             phi_prod(phi1, blk[0]) * phi_prod(phi2, blk[1]);
    });
  }

  const ExactScalar pfac = br == Branch::L ? pprod(gamma) : pprod(xi);
  const ExactScalar qpm = br == Branch::L ? ctx.qinv : ctx.q;
  const ExactScalar msign = m % 2 == 0 ? ExactScalar(1) : ExactScalar(-1);
  std::vector<std::vector<ExactScalar>> mat(static_cast<std::size_t>(m),
                                            std::vector<ExactScalar>(static_cast<std::size_t>(m)));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const auto ju = static_cast<std::size_t>(j);
      const auto ku = static_cast<std::size_t>(k);
      mat[ju][ku] = phi2[ku] * kfun(Kern::t, gamma[ku], xi[ju], ctx) *
                        kfun_prod1(Kern::h, gamma[ku], xi, ctx) +
                    qpm * msign * phi1[ku] * kfun(Kern::t, xi[ju], gamma[ku], ctx) *
                        kfun_prod2(Kern::h, xi, gamma[ku], ctx);
    }
  ExactScalar rhs = pfac * delta(DeltaKind::Prime, xi, ctx) * delta(DeltaKind::Plain, gamma, ctx) *
                    det_field(mat);
  return {lhs, rhs};
}

LhsRhs<ExactScalar> lemma3(const VarSet<ExactScalar>& alpha, const VarSet<ExactScalar>& beta,
                           const ExactScalar& z, const QContext<ExactScalar>& ctx) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != n) throw input_error("lemma3: #alpha must equal #beta");
  ExactScalar lhs(0);
  for (int nI = 0; nI <= n; ++nI) {
    const int sizes[] = {nI, n - nI};
    for_each_partition(n, sizes, [&](const Blocks& ba) {
      VarSet<ExactScalar> aI = subset(alpha, ba[0]), aII = subset(alpha, ba[1]);
      for_each_partition(n, sizes, [&](const Blocks& bb) {
        VarSet<ExactScalar> bI = subset(beta, bb[0]), bII = subset(beta, bb[1]);
        lhs += pow_int(ctx.q, nI) * kfun_prod2(Kern::f, bI, z, ctx) *
               kfun_prod(Kern::f, bII, bI, ctx) * kfun_prod(Kern::f, aI, aII, ctx) *
               izergin(bI, aI, KVariant::Right, ctx) *
               izergin(aII, scale_set(bII, ctx.qm2()), KVariant::Left, ctx);
      });
    });
  }
  ExactScalar rhs = pow_int(ctx.q, n) * g_n(alpha, beta, ctx) *
                    kfun_prod2(Kern::h, alpha, z, ctx) * kfun_prod2(Kern::g, beta, z, ctx);
  return {lhs, rhs};
}

LhsRhs<ExactScalar> corollary(Corollary which, const VarSet<ExactScalar>& alpha,
                              const VarSet<ExactScalar>& beta, const QContext<ExactScalar>& ctx) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != n) throw input_error("corollary: #alpha must equal #beta");
  ExactScalar lhs(0);
  for (int nI = 0; nI <= n; ++nI) {
    const int nII = n - nI;
    const int sizes[] = {nI, nII};
    ExactScalar weight(1);
    KVariant v1 = KVariant::Right, v2 = KVariant::Left;
    switch (which) {
      case Corollary::C1a:
        break;
      case Corollary::C1b:
        weight = pow_int(ctx.q, 2 * nII);
        v1 = KVariant::Left;
        v2 = KVariant::Right;
        break;
      case Corollary::C2a:
        weight = pow_int(ctx.q, 2 * nI);
        break;
      case Corollary::C2b:
        v1 = KVariant::Left;
        v2 = KVariant::Right;
        break;
      case Corollary::C3:
        // q^{n_I} [n_I] with the q-number [n] = (q^n - q^-n)/(q - q^-1)
        weight = pow_int(ctx.q, nI) * (pow_int(ctx.q, nI) - pow_int(ctx.q, -nI)) / ctx.qd;
        break;
    }
    for_each_partition(n, sizes, [&](const Blocks& ba) {
      VarSet<ExactScalar> aI = subset(alpha, ba[0]), aII = subset(alpha, ba[1]);
      for_each_partition(n, sizes, [&](const Blocks& bb) {
        VarSet<ExactScalar> bI = subset(beta, bb[0]), bII = subset(beta, bb[1]);
        lhs += weight * kfun_prod(Kern::f, bII, bI, ctx) * kfun_prod(Kern::f, aI, aII, ctx) *
               izergin(bI, aI, v1, ctx) * izergin(aII, scale_set(bII, ctx.qm2()), v2, ctx);
      });
    });
  }
  ExactScalar gn = g_n(alpha, beta, ctx);
  ExactScalar rhs;
  switch (which) {
    case Corollary::C1a:
    case Corollary::C2b:
      rhs = gn;
      break;
    case Corollary::C1b:
      rhs = pprod(beta) / pprod(alpha) * gn;
      break;
    case Corollary::C2a:
      rhs = pow_int(ctx.q, 2 * n) * pprod(alpha) / pprod(beta) * gn;
      break;
    case Corollary::C3:
      rhs = (pow_int(ctx.q, 2 * n) * pprod(alpha) / pprod(beta) - ExactScalar(1)) / ctx.qd * gn;
      break;
  }
  return {lhs, rhs};
}

LhsRhs<ExactScalar> triv_rav_term(const VarSet<ExactScalar>& alphaI,
                                  const VarSet<ExactScalar>& alphaII,
                                  const VarSet<ExactScalar>& betaI,
                                  const VarSet<ExactScalar>& betaII,
                                  const VarSet<ExactScalar>& alpha,
                                  const VarSet<ExactScalar>& beta,
                                  const QContext<ExactScalar>& ctx) {
  ExactScalar lhs = izergin(betaI, alphaI, KVariant::Right, ctx) *
                    izergin(alphaII, scale_set(betaII, ctx.qm2()), KVariant::Left, ctx);
  ExactScalar rhs = pow_int(ctx.q, 2 * static_cast<long>(alphaII.size())) * pprod(alpha) /
                    pprod(beta) * izergin(betaI, alphaI, KVariant::Left, ctx) *
                    izergin(alphaII, scale_set(betaII, ctx.qm2()), KVariant::Right, ctx);
  return {lhs, rhs};
}

LhsRhs<ExactScalar> genmat(const RowGen& block1, std::size_t a, const RowGen& block2,
                           std::size_t b, const VarSet<ExactScalar>& x,
                           const QContext<ExactScalar>& ctx) {
  if (x.size() != a + b) throw input_error("genmat: #x must equal a + b");
  const std::size_t n = a + b;
  std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n));
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j][k] = block1(j, x[k]);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t k = 0; k < n; ++k) m[a + j][k] = block2(j, x[k]);
  ExactScalar lhs = delta(DeltaKind::Plain, x, ctx) * det_field(m);

  ExactScalar rhs(0);
  const int sizes[] = {static_cast<int>(a), static_cast<int>(b)};
  for_each_partition(static_cast<int>(n), sizes, [&](const Blocks& blk) {
    VarSet<ExactScalar> xI = subset(x, blk[0]), xII = subset(x, blk[1]);
    std::vector<std::vector<ExactScalar>> m1(a, std::vector<ExactScalar>(a));
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t k = 0; k < a; ++k) m1[j][k] = block1(j, xI[k]);
    std::vector<std::vector<ExactScalar>> m2(b, std::vector<ExactScalar>(b));
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < b; ++k) m2[j][k] = block2(j, xII[k]);
    rhs += kfun_prod(Kern::g, xII, xI, ctx) *
           (delta(DeltaKind::Plain, xI, ctx) * det_field(m1)) *
           (delta(DeltaKind::Plain, xII, ctx) * det_field(m2));
  });
  return {lhs, rhs};
}

LhsRhs<ExactScalar> lambda_pair(const VarSet<ExactScalar>& alpha, const VarSet<ExactScalar>& beta,
                                const ExactScalar& z, const QContext<ExactScalar>& ctx) {
  return {lambda_l(alpha, beta, z, ctx), lambda_r(alpha, beta, z, ctx)};
}

LhsRhs<ExactScalar> lambda_residue_check(const VarSet<ExactScalar>& alpha,
                                         const VarSet<ExactScalar>& beta, const ExactScalar& z,
                                         LambdaResidue which, const QContext<ExactScalar>& ctx) {
  const std::size_t n = alpha.size();
  if (n == 0 || beta.size() != n)
    throw input_error("lambda_residue_check: need matching nonempty sets");
  const bool left = which == LambdaResidue::LAtBeta || which == LambdaResidue::LAtBetaQm2;
  const bool at_beta = which == LambdaResidue::LAtBeta || which == LambdaResidue::RAtBeta;
  const ExactScalar bn = beta.back();
  const ExactScalar pole = at_beta ? bn : bn * ctx.qm2();

  // Lambda as an exact rational function of alpha_n.
  VarSet<RatFun> alphaSym;
  for (std::size_t i = 0; i + 1 < n; ++i) alphaSym.emplace_back(alpha[i]);
  alphaSym.push_back(RatFun::variable());
  VarSet<RatFun> betaR;
  for (const auto& b : beta) betaR.emplace_back(b);
  QContext<RatFun> rctx{RatFun(ctx.q)};
  RatFun lam = left ? lambda_l(alphaSym, betaR, RatFun(z), rctx)
                    : lambda_r(alphaSym, betaR, RatFun(z), rctx);
  ExactScalar residue = ratfun_residue(lam, pole);

  // Predicted: recursion coefficient at the coincidence, with its polar
  // factor replaced by its own residue, times Lambda_{n-1}.
  VarSet<ExactScalar> alpha1(alpha.begin(), alpha.end() - 1);
  VarSet<ExactScalar> beta1(beta.begin(), beta.end() - 1);
  ExactScalar lam1 = left ? lambda_l(alpha1, beta1, z, ctx) : lambda_r(alpha1, beta1, z, ctx);
  ExactScalar coeff;
  if (at_beta) {
    // q f(b_n, a_n) f(b_n, z) f(beta_n^c, b_n) f(a_n, alpha_n^c), polar factor
    // f(b_n, a_n) with residue -b_n (q - q^{-1}) in a_n.
    coeff = ctx.q * (-(bn * ctx.qd)) * kfun(Kern::f, bn, z, ctx) *
            kfun_prod2(Kern::f, beta1, bn, ctx) * kfun_prod1(Kern::f, bn, alpha1, ctx);
  } else {
    // f(a_n, b_n q^{-2}) f(alpha_n^c, a_n) f(b_n, beta_n^c), polar factor
    // f(a_n, b_n q^{-2}) with residue +b_n q^{-2} (q - q^{-1}).
    coeff = (pole * ctx.qd) * kfun_prod2(Kern::f, alpha1, pole, ctx) *
            kfun_prod1(Kern::f, bn, beta1, ctx);
  }
  return {residue, coeff * lam1};
}

}  // namespace qsp
