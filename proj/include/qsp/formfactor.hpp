#pragma once

#include "qsp/scalarprod.hpp"

namespace qsp {

enum class FFWhich { FF22, FF22_twisted, FF33_q2, FF12_q };

struct FormFactorRequest {
  FFWhich which;
  ExactScalar z;
  BetheConfig cfg;  // must carry r1(z), r3(z) entries
};

enum class FFRoute { Det, Sum };

// Twisted form factor of a diagonal monodromy entry:
// (tau_kappa(z|C) - tau(z|B)) / (kappa_i - 1) times the scalar product,
// with the scalar product either from the determinant representation or from
// the partition-sum formula.
ExactScalar twisted_ff(const FormFactorRequest& req, FFRoute route);

enum class FF22Route { Interpolation, RowDerivative };

// Ordinary form factor of T22: exact d/dkappa2 at kappa2 = 1 of
// (tau_kappa - tau) S1(kappa2), with the C-side r tables regenerated from the
// twisted Bethe equations at each kappa2 and the root sets held fixed.
// Interpolation samples the polynomial in kappa2 and differentiates exactly;
// RowDerivative expands d(det N)/dkappa2 into one determinant per row.
ExactScalar ff22(const VarSet<ExactScalar>& uC, const VarSet<ExactScalar>& vC,
                 const VarSet<ExactScalar>& uB, const VarSet<ExactScalar>& vB,
                 const ExactScalar& z, const ExactScalar& r1_at_z, const ExactScalar& r3_at_z,
                 const QContext<ExactScalar>& ctx, FF22Route route);

// Twisted form factor of T12 at kappa3/kappa1 = q, #uC = #uB + 1; cfg.z must
// equal z and carry its r entries.
ExactScalar ff12_twisted(const ExactScalar& z, const BetheConfig& cfg);

}  // namespace qsp
