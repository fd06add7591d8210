#include "hirota/spectral.hpp"

namespace hirota {

namespace {

// Roots of r*zeta^2 - (z + 1/z)*zeta + r = 0; product is exactly 1.
std::pair<cplx, cplx> zeta_roots(cplx z, double r) {
  cplx s = z + 1.0 / z;
  cplx disc = std::sqrt(s * s - 4.0 * r * r);
  cplx za = (s + disc) / (2.0 * r);
  cplx zb = (s - disc) / (2.0 * r);
  // stabilize the small root against cancellation
  if (std::abs(za) >= std::abs(zb))
    zb = 1.0 / za;
  else
    za = 1.0 / zb;
  return {za, zb};
}

bool on_sigma(cplx z, const Params& p, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double x = std::abs(z.real());
  return x >= p.r() - p.A - tol && x <= p.r() + p.A + tol;
}

}  // namespace

SpectralScalars eval_spectral(cplx z, const Params& p, Sheet sheet, CutSide side) {
  if (z == cplx(0.0, 0.0)) throw ZeroArgument("eval_spectral: z = 0");
  const double r = p.r();

  cplx z_eff = z;
  if (on_sigma(z, p, 1e-14)) {
    if (side == CutSide::none)
      throw CutAmbiguity("eval_spectral: z on the cut, no side hint");
    // limit from above/below realized by selecting the branch at a point nudged
    // off the cut; the returned scalars are still evaluated at the nudged point,
    // whose distance (1e-10) is far below every downstream tolerance on-cut
    z_eff = cplx(z.real(), side == CutSide::above ? 1e-10 : -1e-10);
  }

  auto [za, zb] = zeta_roots(z_eff, r);
  cplx zeta_p = std::abs(za) <= std::abs(zb) ? za : zb;  // |zeta| <= 1 root
  cplx zeta = (sheet == Sheet::principal) ? zeta_p : 1.0 / zeta_p;

  SpectralScalars s;
  s.z = z_eff;
  s.sheet = sheet;
  s.zeta = zeta;
  s.xi = p.A != 0.0 ? (r * zeta - z_eff) / p.A : cplx(0.0);
  s.omega = r * (zeta - 1.0 / zeta) / 2.0;
  s.eta = std::log(zeta);
  const cplx i(0.0, 1.0);
  s.delta = (p.b + i * p.a) / z_eff * std::exp(-i * p.B) +
            (p.b - i * p.a) * z_eff * std::exp(i * p.B);
  s.D = i * p.a / 2.0 *
            (std::exp(i * p.B) * z_eff * z_eff - std::exp(-i * p.B) / (z_eff * z_eff)) +
        i * (p.a * r * r * std::cos(p.B) - p.b * (1.0 + p.A * p.A) * std::sin(p.B)) +
        (p.b - i * p.a) * p.A * p.A * std::exp(i * p.B) -
        (p.b + i * p.a) * std::exp(-i * p.B);
  return s;
}

RegionTag classify_region(cplx z, const Params& p) {
  const double tol = 1e-12;
  for (double bp : p.branch_points())
    if (std::abs(z - cplx(bp, 0.0)) < tol) return RegionTag::BranchPoint;
  double az = std::abs(z);
  if (on_sigma(z, p, tol)) {
    if (std::abs(az - 1.0) < tol) return RegionTag::Omega_0;
    return az > 1.0 ? RegionTag::Sigma_plus : RegionTag::Sigma_minus;
  }
  if (std::abs(az - 1.0) < tol) return RegionTag::Omega_0;
  return az < 1.0 ? RegionTag::Omega_in : RegionTag::Omega_out;
}

Mat2 time_phase(double t, cplx z, const Params& p, Sheet sheet) {
  SpectralScalars s = eval_spectral(z, p, sheet);
  double scalar = p.A * p.A * (p.a * std::sin(p.B) + p.b * std::cos(p.B));
  cplx phase = s.delta * s.omega * t;
  Mat2 m;
  m[0][0] = std::exp(scalar * t + phase);
  m[0][1] = 0.0;
  m[1][0] = 0.0;
  m[1][1] = std::exp(scalar * t - phase);
  return m;
}

}  // namespace hirota
