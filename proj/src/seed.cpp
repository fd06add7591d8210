#include "hirota/seed.hpp"

#include <cmath>

namespace hirota {

namespace {

cplx ctilde_value(const CTilde& c, cplx z, cplx z1, cplx eta) {
  switch (c.kind) {
    case CTilde::Kind::zero:
      return 0.0;
    case CTilde::Kind::kappa_eta:
      return c.kappa * eta;
    case CTilde::Kind::series: {
      cplx acc = 0.0, pw = 1.0;
      for (cplx ck : c.series) {
        acc += ck * pw;
        pw *= (z - z1);
      }
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

Mat2 phi_elementary(int n, double t, cplx z, const ElementarySpec& spec, Sheet sheet,
                    CutSide side) {
  const Params& p = spec.params;
  if (z == cplx(0.0)) throw ZeroArgument("phi_elementary: z = 0");
  for (double bp : p.branch_points())
    if (std::abs(z - cplx(bp, 0.0)) < 1e-8)
      throw NearBranchPoint("phi_elementary: use the series path near a branch point");

  SpectralScalars s = eval_spectral(z, p, sheet, side);
  const double r = p.r();
  cplx z1 = r + p.A;
  cplx chi = double(n - spec.n0) * s.eta + s.delta * s.omega * (t - spec.t0) +
             ctilde_value(spec.c_tilde, z, z1, s.eta);
  cplx ch = std::cosh(chi);
  cplx shw = std::sinh(chi) / s.omega;
  double pref = std::pow(r, n - spec.n0) *
                std::exp((p.a * std::sin(p.B) + p.b * std::cos(p.B)) * p.A * p.A *
                         (t - spec.t0));
  cplx off = (1.0 - z * z) * shw / (2.0 * z);
  Mat2 m;
  m[0][0] = pref * (ch - off);
  m[0][1] = pref * (p.A * shw);
  m[1][0] = pref * (-p.A * shw);
  m[1][1] = pref * (ch + off);
  return m;
}

Eigenfunction eigenvector(int n, double t, cplx z_i, cplx c_i, const Params& p,
                          Sheet sheet, CutSide side) {
  SpectralScalars s = eval_spectral(z_i, p, sheet, side);
  if (std::abs(s.xi * s.xi - 1.0) < 1e-10)
    throw BranchPointEigenvector("eigenvector: xi^2 = 1 at a branch point");
  Eigenfunction e;
  e.z_i = z_i;
  e.c_i = c_i;
  e.gamma_i = -0.5 * std::log(-s.xi);
  e.kappa_i = double(n) * s.eta + s.delta * s.omega * t + c_i;
  e.f_i = std::sinh(e.kappa_i + e.gamma_i);
  e.g_i = -std::sinh(e.kappa_i - e.gamma_i);
  return e;
}

std::pair<std::vector<cplx>, std::vector<cplx>> taylor_coefficients(
    int n, double t, const ElementarySpec& spec, int N) {
  const Params& p = spec.params;
  const double r = p.r();
  const cplx z1 = r + p.A;
  const int M = 2 * N + 3;  // jet order in the local parameter s, z = z1 + s^2

  Jet z(M, z1);
  z.c[2] = 1.0;

  // (1+z^2)^2 - 4 r^2 z^2 has a simple zero at z1: strip the s^2 factor
  Jet P = (z * z + 1.0) * (z * z + 1.0) - (4.0 * r * r) * (z * z);
  double scaleP = 0.0;
  for (auto& x : P.c) scaleP = std::max(scaleP, std::abs(x));
  if (std::abs(P[0]) > 1e-9 * scaleP || std::abs(P[1]) > 1e-9 * scaleP)
    throw NonremovableSingularity("taylor_coefficients: expected double zero in s");
  Jet Q(M);
  for (int k = 0; k + 2 <= M; ++k) Q.c[k] = P[k + 2];
  Jet omega_red = jet_sqrt(Q) / (2.0 * z);  // omega = s * omega_red

  // pick the sqrt branch matching the principal sheet just off the branch point
  {
    double s0 = 1e-2;
    cplx zp = z1 + s0 * s0;
    cplx om_point = eval_spectral(zp, p, Sheet::principal).omega;
    cplx om_jet = 0.0;
    for (int k = M; k >= 0; --k) om_jet = om_jet * s0 + omega_red[k];
    om_jet *= s0;
    if (std::abs(om_jet - om_point) > std::abs(om_jet + om_point)) {
      for (auto& x : omega_red.c) x = -x;
    }
  }

  Jet omega(M);
  for (int k = 1; k <= M; ++k) omega.c[k] = omega_red[k - 1];
  Jet eta = jet_arcsinh(omega / cplx(r));

  const cplx i(0.0, 1.0);
  Jet delta = (p.b + i * p.a) * std::exp(-i * p.B) * jet_div(Jet::constant(1.0, M), z) +
              (p.b - i * p.a) * std::exp(i * p.B) * z;

  Jet ct(M);
  if (spec.c_tilde.kind == CTilde::Kind::kappa_eta) {
    ct = spec.c_tilde.kappa * eta;
  } else if (spec.c_tilde.kind == CTilde::Kind::series) {
    Jet zm(M);
    zm.c[2] = 1.0;  // z - z1 = s^2
    Jet pw = Jet::constant(1.0, M);
    for (cplx ck : spec.c_tilde.series) {
      ct = ct + ck * pw;
      pw = pw * zm;
    }
  }

  Jet chi = double(n - spec.n0) * eta + (t - spec.t0) * (delta * omega) + ct;
  Jet sh = jet_sinh(chi);
  Jet ch = jet_cosh(chi);

  // sinh(chi)/omega: both vanish at s = 0 when the offset is odd in s
  double scaleS = 0.0;
  for (auto& x : sh.c) scaleS = std::max(scaleS, std::abs(x));
  if (scaleS == 0.0) scaleS = 1.0;
  if (std::abs(sh[0]) > 1e-6 * scaleS)
    throw NonremovableSingularity("taylor_coefficients: chi offset has even part");
  Jet sh_red(M);
  for (int k = 0; k + 1 <= M; ++k) sh_red.c[k] = sh[k + 1];
  Jet shw = sh_red / omega_red;  // = sinh(chi)/omega

  Jet off = (1.0 - z * z) * shw / (2.0 * z);
  double pref = std::pow(r, n - spec.n0) *
                std::exp((p.a * std::sin(p.B) + p.b * std::cos(p.B)) * p.A * p.A *
                         (t - spec.t0));
  Jet seed2 = z1 * z;  // (r+A) * z
  Jet f = pref * ((ch - off) + p.A * shw * seed2);
  Jet g = pref * ((-p.A) * shw + (ch + off) * seed2);

  double scaleF = 0.0;
  for (auto& x : f.c) scaleF = std::max(scaleF, std::abs(x));
  for (auto& x : g.c) scaleF = std::max(scaleF, std::abs(x));
  std::vector<cplx> fc(N + 1), gc(N + 1);
  for (int k = 0; k <= 2 * N + 1; ++k) {
    if (k % 2 == 1) {
      if (std::abs(f[k]) > 1e-6 * scaleF || std::abs(g[k]) > 1e-6 * scaleF)
        throw NonremovableSingularity("taylor_coefficients: odd coefficients survive");
    } else if (k / 2 <= N) {
      fc[k / 2] = f[k];
      gc[k / 2] = g[k];
    }
  }
  return {fc, gc};
}

}  // namespace hirota
