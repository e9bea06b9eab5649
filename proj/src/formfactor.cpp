#include "qsp/formfactor.hpp"

namespace qsp {

ExactScalar twisted_ff(const FormFactorRequest& req, FFRoute route) {
  const BetheConfig& cfg = req.cfg;
  const auto& ctx = cfg.ctx;
  ExactScalar denom;
  DetWhich which;
  switch (req.which) {
    case FFWhich::FF22_twisted:
      if (!(cfg.kappa.k1 == ExactScalar(1)) || !(cfg.kappa.k3 == ExactScalar(1)))
        throw contract_error("twisted_ff(FF22): requires kappa = (1, kappa2, 1)");
      if (cfg.kappa.k2 == ExactScalar(1))
        throw contract_error("twisted_ff(FF22): kappa2 = 1 is the untwisted point");
      denom = cfg.kappa.k2 - ExactScalar(1);
      which = DetWhich::S1;
      break;
    case FFWhich::FF33_q2:
      if (!(cfg.kappa.k1 == ExactScalar(1)) || !(cfg.kappa.k2 == ExactScalar(1)) ||
          !(cfg.kappa.k3 == ctx.q2()))
        throw contract_error("twisted_ff(FF33): requires kappa = (1, 1, q^2)");
      denom = ctx.q2() - ExactScalar(1);
      which = DetWhich::Sq2;
      break;
    default:
      throw input_error("twisted_ff: request must be FF22_twisted or FF33_q2");
  }
  ExactScalar taudiff =
      tau(req.z, Side::C, cfg, true) - tau(req.z, Side::B, cfg, false);
  ExactScalar s = route == FFRoute::Det ? scalar_det(cfg, which) : scalar_sum(cfg);
  return taudiff / denom * s;
}

namespace {

BetheConfig ff22_config(const VarSet<ExactScalar>& uC, const VarSet<ExactScalar>& vC,
                        const VarSet<ExactScalar>& uB, const VarSet<ExactScalar>& vB,
                        const ExactScalar& z, const ExactScalar& r1z, const ExactScalar& r3z,
                        const QContext<ExactScalar>& ctx, const ExactScalar& k2) {
  Twist kappa{ExactScalar(1), k2, ExactScalar(1)};
  return make_onshell_config(uC, vC, uB, vB, kappa, ctx, z, r1z, r3z);
}

}  // namespace

ExactScalar ff22(const VarSet<ExactScalar>& uC, const VarSet<ExactScalar>& vC,
                 const VarSet<ExactScalar>& uB, const VarSet<ExactScalar>& vB,
                 const ExactScalar& z, const ExactScalar& r1_at_z, const ExactScalar& r3_at_z,
                 const QContext<ExactScalar>& ctx, FF22Route route) {
  const long a = static_cast<long>(uC.size());
  const long b = static_cast<long>(vC.size());
  auto taudiff = [&](const BetheConfig& cfg) {
    return tau(z, Side::C, cfg, true) - tau(z, Side::B, cfg, false);
  };

  if (route == FF22Route::Interpolation) {
    // (tau_kappa - tau) S1 is polynomial in kappa2 of degree <= a + b + 1
    // (every matrix row is affine in kappa2, the eigenvalue difference
    // linear); sample at distinct points and differentiate exactly.
    const long npts = a + b + 2;
    std::vector<std::pair<ExactScalar, ExactScalar>> pts;
    pts.reserve(static_cast<std::size_t>(npts));
    for (long i = 1; i <= npts; ++i) {
      ExactScalar k2(i);
      BetheConfig cfg = ff22_config(uC, vC, uB, vB, z, r1_at_z, r3_at_z, ctx, k2);
      pts.emplace_back(k2, taudiff(cfg) * scalar_det(cfg, DetWhich::S1));
    }
    Poly p = poly_interpolate(pts);
    return p.derivative().eval(ExactScalar(1));
  }

  // Analytic route at kappa2 = 1: F = (d tau_kappa / d kappa2) S
  //                                 + (tau_kappa - tau) dS/dkappa2.
  BetheConfig cfg = ff22_config(uC, vC, uB, vB, z, r1_at_z, r3_at_z, ctx, ExactScalar(1));
  ExactScalar s = scalar_det(cfg, DetWhich::S1);
  ExactScalar dtau = kfun_prod1(Kern::f, z, cfg.uC, ctx) * kfun_prod2(Kern::f, cfg.vC, z, ctx);

  auto spec = make_nmatrix_spec(cfg, DetWhich::S1);
  const std::size_t n = spec.cols.size();
  std::vector<std::vector<ExactScalar>> base(n, std::vector<ExactScalar>(n, ExactScalar(0)));
  for (std::size_t j = 0; j < uC.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) base[j][k] = n_entry_u(spec, j, k);
  for (std::size_t j = 0; j < vB.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) base[uC.size() + j][k] = n_entry_v(spec, j, k);

  // d/dkappa2 of a u row is the kappa2 coefficient of its second term; of a
  // v row it is the r3-carrying term itself, since the regenerated C-side
  // r3 values are linear in kappa2.
  ExactScalar ddet(0);
  for (std::size_t r = 0; r < n; ++r) {
    auto m = base;
    for (std::size_t k = 0; k < n; ++k)
      m[r][k] = r < uC.size() ? n_entry_u_term2_coeff(spec, r, k)
                              : n_entry_v_term1(spec, r - uC.size(), k);
    ddet += det_field(m);
  }
  std::vector<ExactScalar> xbar;
  xbar.reserve(n);
  for (const auto& col : spec.cols) xbar.push_back(col.x);
  ExactScalar ds = s_prefactor(cfg, DetWhich::S1, xbar) * ddet;
  return dtau * s + taudiff(cfg) * ds;
}

ExactScalar ff12_twisted(const ExactScalar& z, const BetheConfig& cfg) {
  if (!cfg.z || !(*cfg.z == z))
    throw input_error("ff12_twisted: cfg must carry the spectral point z");
  return scalar_det(cfg, DetWhich::F12);
}

}  // namespace qsp
