#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qsp/izergin.hpp"
#include "qsp/partitions.hpp"
#include "qsp/unipoly.hpp"

namespace qsp {

template <class F>
using LhsRhs = std::pair<F, F>;

// Values of an arbitrary function at the points of a set, index-aligned with
// the owning VarSet. The identities only ever read phi at those points.
using PhiTable = std::vector<ExactScalar>;

// Partition sum over gamma splits of two Izergin determinants against alpha
// and beta, versus one Izergin determinant of the merged shifted set.
LhsRhs<ExactScalar> lemma1(const VarSet<ExactScalar>& gamma, const VarSet<ExactScalar>& alpha,
                           const VarSet<ExactScalar>& beta, Branch br,
                           const QContext<ExactScalar>& ctx);

// Partition sum with two arbitrary weight functions versus a single m x m
// determinant of combined rows.
LhsRhs<ExactScalar> lemma2(const VarSet<ExactScalar>& gamma, const VarSet<ExactScalar>& xi,
                           const PhiTable& phi1, const PhiTable& phi2, Branch br,
                           const QContext<ExactScalar>& ctx);

// G_n(alpha|beta) = (-1)^n t(alpha,beta) h(alpha,alpha) h(beta,beta); the
// same-set h products include the diagonal h(x,x) = x.
template <class F>
F g_n(const VarSet<F>& alpha, const VarSet<F>& beta, const QContext<F>& ctx) {
  F sign = alpha.size() % 2 == 0 ? F(1) : F(-1);
  return sign * kfun_prod(Kern::t, alpha, beta, ctx) * kfun_prod(Kern::h, alpha, alpha, ctx) *
         kfun_prod(Kern::h, beta, beta, ctx);
}

// Double partition sum with the q^{n_I} f(beta_I,z) weights versus
// q^n G_n h(alpha,z) g(beta,z).
LhsRhs<ExactScalar> lemma3(const VarSet<ExactScalar>& alpha, const VarSet<ExactScalar>& beta,
                           const ExactScalar& z, const QContext<ExactScalar>& ctx);

// The five z-free corollaries of the previous identity.
enum class Corollary { C1a, C1b, C2a, C2b, C3 };
LhsRhs<ExactScalar> corollary(Corollary which, const VarSet<ExactScalar>& alpha,
                              const VarSet<ExactScalar>& beta, const QContext<ExactScalar>& ctx);

// The elementary left/right weight swap used between the corollaries;
// returns both products of one term for a given split.
LhsRhs<ExactScalar> triv_rav_term(const VarSet<ExactScalar>& alphaI,
                                  const VarSet<ExactScalar>& alphaII,
                                  const VarSet<ExactScalar>& betaI,
                                  const VarSet<ExactScalar>& betaII,
                                  const VarSet<ExactScalar>& alpha,
                                  const VarSet<ExactScalar>& beta,
                                  const QContext<ExactScalar>& ctx);

// Row-generator form of the block determinant expansion: lhs is
// Delta(x) det N for the stacked matrix, rhs the partition sum of block
// determinants weighted by g(x_II, x_I).
using RowGen = std::function<ExactScalar(std::size_t row, const ExactScalar& x)>;
LhsRhs<ExactScalar> genmat(const RowGen& block1, std::size_t a, const RowGen& block2,
                           std::size_t b, const VarSet<ExactScalar>& x,
                           const QContext<ExactScalar>& ctx);

// ---------------------------------------------------------------------------
// The two Lambda representations (summed and factorized) whose equality is
// the core of the z-dependent summation identity, field-generic so residues
// in alpha_n can be taken exactly.
// ---------------------------------------------------------------------------

// Lambda^(l): partition sum over beta splits after the alpha sum has been
// folded into one Izergin determinant.
template <class F>
F lambda_l(const VarSet<F>& alpha, const VarSet<F>& beta, const F& z, const QContext<F>& ctx) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) != n) throw input_error("lambda_l: cardinality mismatch");
  F tot(0);
  for (int nI = 0; nI <= n; ++nI) {
    const int sizes[] = {nI, n - nI};
    for_each_partition(n, sizes, [&](const Blocks& blk) {
      VarSet<F> bI = subset(beta, blk[0]), bII = subset(beta, blk[1]);
      const int nII = n - nI;
      F sign = nII % 2 == 0 ? F(1) : F(-1);
      tot += sign * pow_int(ctx.q, nI - nII) * kfun_prod2(Kern::f, bI, z, ctx) *
             kfun_prod(Kern::f, bII, bI, ctx) *
             kfun_prod(Kern::f, alpha, scale_set(bII, ctx.qm2()), ctx) *
             kz(concat(scale_set(bII, ctx.qm2() * ctx.qm2()), bI), alpha, KVariant::Right, ctx);
    });
  }
  return tot;
}

// Lambda^(r): the closed form q^n G_n h(alpha,z) g(beta,z).
template <class F>
F lambda_r(const VarSet<F>& alpha, const VarSet<F>& beta, const F& z, const QContext<F>& ctx) {
  return pow_int(ctx.q, static_cast<long>(alpha.size())) * g_n(alpha, beta, ctx) *
         kfun_prod2(Kern::h, alpha, z, ctx) * kfun_prod2(Kern::g, beta, z, ctx);
}

LhsRhs<ExactScalar> lambda_pair(const VarSet<ExactScalar>& alpha, const VarSet<ExactScalar>& beta,
                                const ExactScalar& z, const QContext<ExactScalar>& ctx);

// Residue recursions of Lambda in alpha_n at beta_n and beta_n q^{-2}:
// the exact residue versus the recursion coefficient times Lambda_{n-1}.
enum class LambdaResidue { LAtBeta, LAtBetaQm2, RAtBeta, RAtBetaQm2 };
LhsRhs<ExactScalar> lambda_residue_check(const VarSet<ExactScalar>& alpha,
                                         const VarSet<ExactScalar>& beta, const ExactScalar& z,
                                         LambdaResidue which, const QContext<ExactScalar>& ctx);

}  // namespace qsp
