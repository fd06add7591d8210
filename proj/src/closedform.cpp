#include "hirota/closedform.hpp"

#include <array>
#include <cmath>

namespace hirota {

SolitonProfile soliton1_profile(cplx z1, cplx c1, const Params& p, Sheet sheet,
                                CutSide side) {
  SpectralScalars s = eval_spectral(z1, p, sheet, side);
  if (std::abs(s.xi * s.xi - 1.0) < 1e-10)
    throw BranchPointEigenvector("soliton1: xi^2 = 1 at a branch point");
  SolitonProfile pr;
  pr.z1 = z1;
  pr.c1 = c1;
  pr.gamma1 = -0.5 * std::log(-s.xi);
  double az2 = std::norm(z1);
  cplx gp = pr.gamma1 + std::conj(pr.gamma1);  // 2 Re(gamma)
  cplx gm = pr.gamma1 - std::conj(pr.gamma1);  // 2i Im(gamma)
  pr.p1 = az2 * std::exp(gp) + std::exp(-gp);
  pr.q1 = az2 * std::exp(-gp) + std::exp(gp);
  pr.p2 = az2 * std::exp(gm) + std::exp(-gm);
  pr.q2 = az2 * std::exp(-gm) + std::exp(gm);
  double A = p.A;
  cplx w = (az2 * az2 - 1.0) / std::conj(z1);
  pr.n1p = A * pr.q1 - w * std::exp(gm);
  pr.n1m = A * pr.p1 - w * std::exp(-gm);
  pr.n2p = A * pr.q2 - w * std::exp(gp);
  pr.n2m = A * pr.p2 - w * std::exp(-gp);
  return pr;
}

namespace {

// Field value of the one-point form given kappa at (n, t); numerator and
// denominator are plain four-exponential combinations, no branch choices.
cplx soliton_core(const SolitonProfile& pr, cplx kappa) {
  cplx X = kappa + std::conj(kappa);
  cplx Y = kappa - std::conj(kappa);
  cplx den = pr.p1 * std::exp(X) + pr.q1 * std::exp(-X) - pr.p2 * std::exp(Y) -
             pr.q2 * std::exp(-Y);
  cplx num = pr.n1p * std::exp(X) + pr.n1m * std::exp(-X) - pr.n2p * std::exp(Y) -
             pr.n2m * std::exp(-Y);
  return num / den;
}

}  // namespace

cplx soliton1(int n, double t, cplx z1, cplx c1, const Params& p, Sheet sheet,
              CutSide side) {
  SpectralScalars s = eval_spectral(z1, p, sheet, side);
  SolitonProfile pr = soliton1_profile(z1, c1, p, sheet, side);
  cplx kappa = double(n) * s.eta + s.delta * s.omega * t + c1;
  return soliton_core(pr, kappa);
}

double soliton_velocity(cplx z1, const Params& p, Sheet sheet, CutSide side) {
  SpectralScalars s = eval_spectral(z1, p, sheet, side);
  double re_log = s.eta.real();
  if (std::abs(re_log) < 1e-12)
    throw StationaryPhase("soliton_velocity: Re(log zeta) = 0");
  return -(s.delta * s.omega).real() / re_log;
}

namespace {

// Quadratic-form coefficients of the determinant ratio in the k-th eigenvector
// components, with every other eigenvector frozen to its saturated direction.
// Index order of the returned quartets: ff, fg, gf, gg (row component first).
struct ReducedForms {
  std::array<cplx, 4> num, den;
};

ReducedForms reduced_forms(int k, const std::vector<cplx>& zs,
                           const std::vector<cplx>& yf, const std::vector<cplx>& yg,
                           double A) {
  const int N = static_cast<int>(zs.size());
  auto dd = [&](int i, int j) {
    return std::conj(zs[size_t(i)]) * std::conj(zs[size_t(i)]) * zs[size_t(j)] *
               zs[size_t(j)] -
           1.0;
  };
  ReducedForms rf;
  for (int a = 0; a < 2; ++a)      // row-k component: 0 -> conj f_k, 1 -> conj g_k
    for (int b = 0; b < 2; ++b) {  // col-k component: 0 -> f_k, 1 -> g_k
      MatN T(N), H(N);
      for (int i = 0; i < N; ++i) {
        cplx zi = std::conj(zs[size_t(i)]);
        cplx fi = std::conj(yf[size_t(i)]), gi = std::conj(yg[size_t(i)]);
        for (int j = 0; j < N; ++j) {
          cplx zj = zs[size_t(j)];
          cplx fj = yf[size_t(j)], gj = yg[size_t(j)];
          cplx den = dd(i, j);
          if (i != k && j != k) {
            T(i, j) = (zi * zj * fi * fj + gi * gj) / den;
            H(i, j) = (fi * fj + zi * zj * gi * gj) / den + gi * fj / (A * zi);
          } else if (i == k && j != k) {
            T(i, j) = (a == 0 ? zi * zj * fj : gj) / den;
            H(i, j) = (a == 0 ? fj / den : zi * zj * gj / den + fj / (A * zi));
          } else if (i != k && j == k) {
            T(i, j) = (b == 0 ? zi * zj * fi : gi) / den;
            H(i, j) = (b == 0 ? fi / den + gi / (A * zi) : zi * zj * gi / den);
          } else {
            T(i, j) = (a == 0 && b == 0 ? zi * zj / den
                       : a == 1 && b == 1 ? 1.0 / den : cplx(0.0));
            H(i, j) = (a == 0 && b == 0 ? 1.0 / den
                       : a == 1 && b == 1 ? zi * zj / den
                       : a == 1 && b == 0 ? 1.0 / (A * zi) : cplx(0.0));
          }
        }
      }
      rf.den[size_t(2 * a + b)] = lu_det(T);
      rf.num[size_t(2 * a + b)] = A * lu_det(H);
    }
  return rf;
}

// change of basis from (f, g) = (sinh(kappa+gamma), -sinh(kappa-gamma)) to the
// exponentials (p, q) = (exp kappa, exp -kappa)
std::array<cplx, 4> to_pq(const std::array<cplx, 4>& c, cplx E) {
  cplx Eb = std::conj(E);
  // row weights for (pbar, qbar), column weights for (p, q)
  cplx rw[2][2] = {{Eb / 2.0, -1.0 / (2.0 * Eb)}, {-1.0 / (2.0 * Eb), Eb / 2.0}};
  cplx cw[2][2] = {{E / 2.0, -1.0 / (2.0 * E)}, {-1.0 / (2.0 * E), E / 2.0}};
  std::array<cplx, 4> out{};
  for (int u = 0; u < 2; ++u)      // pbar / qbar
    for (int v = 0; v < 2; ++v) {  // p / q
      cplx s = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += rw[a][u] * cw[b][v] * c[size_t(2 * a + b)];
      out[size_t(2 * u + v)] = s;
    }
  return out;
}

}  // namespace

AsymptoticProfile asymptotic_profile(int k, const DarbouxSystem& sys, int sign) {
  const int N = static_cast<int>(sys.points.size());
  const Params& p = sys.params;
  std::vector<double> vel(N);
  std::vector<SpectralScalars> sp(N);
  for (int i = 0; i < N; ++i) {
    sp[i] = eval_spectral(sys.points[i].z, p, sys.sheet, sys.side);
    vel[i] = soliton_velocity(sys.points[i].z, p, sys.sheet, sys.side);
  }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (std::abs(vel[i] - vel[j]) < 1e-10)
        throw TieBreak("asymptotic_profile: coinciding velocities");

  AsymptoticProfile ap;
  ap.k = k;
  ap.s_k = vel[k];
  ap.c_rate = 1e300;
  for (int i = 0; i < N; ++i)
    if (i != k)
      // the slowest cross term between a saturated and a decaying exponential
      ap.c_rate = std::min(ap.c_rate,
                           2.0 * std::abs(sp[i].eta.real()) * std::abs(vel[i] - vel[k]));

  // saturated eigenvector directions of the other components along the k-ray
  std::vector<cplx> zs(N), yf(N), yg(N);
  for (int i = 0; i < N; ++i) {
    zs[size_t(i)] = sys.points[i].z;
    if (i == k) continue;
    // sign of Re(kappa_i) along n = s_k t decides which exponential saturates
    bool head = sp[i].eta.real() * (ap.s_k - vel[i]) * double(sign) > 0.0;
    if (head) {
      yf[size_t(i)] = 1.0;
      yg[size_t(i)] = sp[i].xi;
    } else {
      yf[size_t(i)] = sp[i].xi;
      yg[size_t(i)] = 1.0;
    }
  }

  // match the reduced quadratic form against the plain one-point form to read
  // off the kappa shift and the constant phase of the limit profile
  ReducedForms red = reduced_forms(k, zs, yf, yg, p.A);
  std::vector<cplx> z1{zs[size_t(k)]}, f1{cplx(0.0)}, g1{cplx(0.0)};
  ReducedForms one = reduced_forms(0, z1, f1, g1, p.A);
  cplx gamma_k = -0.5 * std::log(-sp[k].xi);
  cplx E = std::exp(gamma_k);
  std::array<cplx, 4> R = to_pq(red.den, E), r1 = to_pq(one.den, E);
  std::array<cplx, 4> Q = to_pq(red.num, E), q1 = to_pq(one.num, E);

  cplx rp = R[0] / r1[0];  // mu * exp(2 Re delta)
  cplx rq = R[3] / r1[3];  // mu * exp(-2 Re delta)
  cplx mu = std::sqrt(rp * rq);
  if (std::abs(mu) == 0.0 || !std::isfinite(std::abs(mu)))
    throw SingularGram("asymptotic_profile: degenerate reduced form");
  double re_d = 0.25 * std::log(std::abs(rp / rq));
  cplx e2i = (R[1] / r1[1]) / mu;  // exp(-2i Im delta), up to the sqrt sign
  double im_d = -0.5 * std::arg(e2i);
  ap.kappa_shift = cplx(re_d, im_d);
  cplx phase = (Q[0] / q1[0]) / rp;
  ap.Gamma = std::arg(phase);
  return ap;
}

cplx asymptotic_soliton(int k, const DarbouxSystem& sys, int n, double t, int sign) {
  const Params& p = sys.params;
  AsymptoticProfile ap = asymptotic_profile(k, sys, sign);
  SpectralScalars s = eval_spectral(sys.points[k].z, p, sys.sheet, sys.side);
  SolitonProfile pr =
      soliton1_profile(sys.points[k].z, sys.points[k].c, p, sys.sheet, sys.side);
  cplx kappa = double(n) * s.eta + s.delta * s.omega * t + sys.points[k].c + ap.kappa_shift;
  return soliton_core(pr, kappa) * std::exp(cplx(0.0, ap.Gamma));
}

std::pair<double, cplx> max_amplitude(cplx z1, const Params& p, CutSide side) {
  double az2 = std::norm(z1);
  if (az2 <= 1.0) throw ZeroArgument("max_amplitude: |z1| <= 1");
  double r = p.r(), A = p.A;
  double mx = 0.5 * ((r + A) * az2 - (r - A) / az2);
  SpectralScalars s = eval_spectral(z1, p, Sheet::principal, side);
  cplx gamma = -0.5 * std::log(-s.xi);
  cplx u = (r + A) * z1;
  cplx c1 = 0.5 * std::log((1.0 + u * std::exp(-2.0 * gamma)) /
                           (u + std::exp(-2.0 * gamma)));
  return {mx, c1};
}

double max_amplitude_iterated(const std::vector<cplx>& zs, double A) {
  double M = A;
  for (cplx z : zs) {
    double az2 = std::norm(z);
    if (az2 <= 1.0) throw ZeroArgument("max_amplitude_iterated: |z| <= 1");
    double R = std::sqrt(1.0 + M * M);
    M = 0.5 * ((R + M) * az2 - (R - M) / az2);
  }
  return M;
}

double rogue_max(int N, double A) {
  double z2 = std::pow(std::sqrt(1.0 + A * A) + A, 2);
  return max_amplitude_iterated(std::vector<cplx>(N, std::sqrt(z2)), A);
}

}  // namespace hirota
