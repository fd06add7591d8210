#include "hirota/darboux.hpp"

#include <array>
#include <cmath>

namespace hirota {

namespace {

struct Eigs {
  std::vector<cplx> z, f, g;
};

Eigs eval_eigs(const DarbouxSystem& sys, int n, double t) {
  Eigs e;
  for (auto& pt : sys.points) {
    Eigenfunction ef = eigenvector(n, t, pt.z, pt.c, sys.params, sys.sheet, sys.side);
    e.z.push_back(pt.z);
    e.f.push_back(ef.f_i);
    e.g.push_back(ef.g_i);
  }
  return e;
}

}  // namespace

cplx fundamental_dt(cplx v, cplx z1, cplx f1, cplx g1) {
  if (f1 == cplx(0.0) && g1 == cplx(0.0))
    throw ZeroEigenvector("fundamental_dt: zero eigenvector");
  if (z1 == cplx(0.0)) throw ZeroArgument("fundamental_dt: z1 = 0");
  double az2 = std::norm(z1);
  cplx num = (std::norm(f1) + az2 * std::norm(g1)) * v +
             star(z1) * (az2 * az2 - 1.0) * f1 * std::conj(g1);
  cplx den = az2 * std::norm(f1) + std::norm(g1);
  return num / den;
}

Mat2 darboux_matrix_v1(cplx z, cplx z1, cplx f1, cplx g1) {
  cplx zs = star(z1);
  if (std::abs(z - zs) < 1e-12 || std::abs(z + zs) < 1e-12)
    throw PoleHit("darboux_matrix_v1: z at a pole");
  double az2 = std::norm(z1);
  if (std::abs(az2 - 1.0) < 1e-12)
    throw SingularGram("darboux_matrix_v1: |z1| = 1 degenerates");
  double yy = std::norm(f1) + std::norm(g1);
  double ys = std::norm(f1) - std::norm(g1);
  cplx alpha = yy / (az2 - 1.0) - ys / (az2 + 1.0);
  cplx beta = yy / (az2 - 1.0) + ys / (az2 + 1.0);

  // K^{-1} |y><y|
  cplx P[2][2] = {{f1 * std::conj(f1) / alpha, f1 * std::conj(g1) / alpha},
                  {g1 * std::conj(f1) / beta, g1 * std::conj(g1) / beta}};
  Mat2 m;
  cplx cm = zs / (z - zs), cp = zs / (z + zs);
  // sigma3 P sigma3 flips the sign of the off-diagonal entries
  m[0][0] = 1.0 - cm * P[0][0] + cp * P[0][0];
  m[0][1] = -cm * P[0][1] - cp * P[0][1];
  m[1][0] = -cm * P[1][0] - cp * P[1][0];
  m[1][1] = 1.0 - cm * P[1][1] + cp * P[1][1];
  cplx scale = az2 / (1.0 + std::norm(g1) / beta);
  m[1][0] *= scale;
  m[1][1] *= scale;
  return m;
}

cplx nfold_solution(const DarbouxSystem& sys, int n, double t) {
  const int N = static_cast<int>(sys.points.size());
  const double A = sys.params.A;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (std::abs(sys.points[i].z - sys.points[j].z) < 1e-12)
        throw SingularGram("nfold_solution: colliding spectral points");
  Eigs e = eval_eigs(sys, n, t);
  MatN T(N), H(N);
  for (int i = 0; i < N; ++i) {
    cplx zi = std::conj(e.z[i]), fi = std::conj(e.f[i]), gi = std::conj(e.g[i]);
    for (int j = 0; j < N; ++j) {
      cplx zj = e.z[j], fj = e.f[j], gj = e.g[j];
      cplx den = zi * zi * zj * zj - 1.0;
      T(i, j) = (zi * zj * fi * fj + gi * gj) / den;
      H(i, j) = (fi * fj + zi * zj * gi * gj) / den + gi * fj / (A * zi);
    }
  }
  cplx dT = lu_det(T);
  if (dT == cplx(0.0) || !std::isfinite(std::abs(dT)))
    throw SingularGram("nfold_solution: degenerate denominator");
  return A * lu_det(H) / dT;
}

cplx nfold_solution_gram(const DarbouxSystem& sys, int n, double t) {
  const int N = static_cast<int>(sys.points.size());
  Eigs e = eval_eigs(sys, n, t);
  MatN alpha(N), beta(N);
  for (int i = 0; i < N; ++i) {
    cplx zi_s = star(e.z[i]);
    for (int j = 0; j < N; ++j) {
      cplx yy = std::conj(e.f[i]) * e.f[j] + std::conj(e.g[i]) * e.g[j];
      cplx ys = std::conj(e.f[i]) * e.f[j] - std::conj(e.g[i]) * e.g[j];
      alpha(i, j) = yy / (e.z[j] - zi_s) - ys / (e.z[j] + zi_s);
      beta(i, j) = yy / (e.z[j] - zi_s) + ys / (e.z[j] + zi_s);
    }
  }
  std::vector<cplx> y2c(N), y2lc(N);
  for (int i = 0; i < N; ++i) {
    y2c[i] = std::conj(e.g[i]);
    y2lc[i] = std::conj(e.z[i]) * std::conj(e.g[i]);  // Lambda Y2^dagger
  }
  std::vector<cplx> sa = lu_solve(alpha, y2c);
  std::vector<cplx> sb = lu_solve(beta, y2lc);
  cplx q1 = 0.0, q2 = 0.0;
  double prod = 1.0;
  for (int i = 0; i < N; ++i) {
    q1 += e.f[i] * sa[i];   // Y1 alpha^{-1} Y2^dagger
    q2 += e.g[i] * sb[i];   // Y2 beta^{-1} Lambda Y2^dagger
    prod *= std::norm(e.z[i]);
  }
  return (cplx(sys.params.A) + 2.0 * q1) * (1.0 + 2.0 * q2) / prod;
}

Mat2 nfold_matrix(const DarbouxSystem& sys, int n, double t, cplx z) {
  const int N = static_cast<int>(sys.points.size());
  Eigs e = eval_eigs(sys, n, t);
  for (int j = 0; j < N; ++j) {
    cplx zs = star(e.z[j]);
    if (std::abs(z - zs) < 1e-12 || std::abs(z + zs) < 1e-12)
      throw PoleHit("nfold_matrix: z at a pole");
  }
  MatN alphaT(N), betaT(N);
  for (int i = 0; i < N; ++i) {
    cplx zi_s = star(e.z[i]);
    for (int j = 0; j < N; ++j) {
      cplx yy = std::conj(e.f[i]) * e.f[j] + std::conj(e.g[i]) * e.g[j];
      cplx ys = std::conj(e.f[i]) * e.f[j] - std::conj(e.g[i]) * e.g[j];
      alphaT(j, i) = yy / (e.z[j] - zi_s) - ys / (e.z[j] + zi_s);
      betaT(j, i) = yy / (e.z[j] - zi_s) + ys / (e.z[j] + zi_s);
    }
  }
  // X1 = -Y1 alpha^{-1}, X2 = -Y2 beta^{-1} (row vectors)
  std::vector<cplx> y1(N), y2(N);
  for (int i = 0; i < N; ++i) {
    y1[i] = e.f[i];
    y2[i] = e.g[i];
  }
  std::vector<cplx> x1 = lu_solve(alphaT, y1);
  std::vector<cplx> x2 = lu_solve(betaT, y2);
  for (auto& v : x1) v = -v;
  for (auto& v : x2) v = -v;

  Mat2 m;
  m[0][0] = 1.0; m[0][1] = 0.0; m[1][0] = 0.0; m[1][1] = 1.0;
  for (int j = 0; j < N; ++j) {
    cplx zs = star(e.z[j]);
    cplx bra[2] = {std::conj(e.f[j]), std::conj(e.g[j])};
    cplx cm = 1.0 / (z - zs), cp = 1.0 / (z + zs);
    // sigma3 |x><y| sigma3 flips the off-diagonal signs
    m[0][0] += x1[j] * bra[0] * (cm - cp);
    m[0][1] += x1[j] * bra[1] * (cm + cp);
    m[1][0] += x2[j] * bra[0] * (cm + cp);
    m[1][1] += x2[j] * bra[1] * (cm - cp);
  }
  std::vector<cplx> y2lc(N);
  for (int i = 0; i < N; ++i) y2lc[i] = std::conj(e.z[i]) * std::conj(e.g[i]);
  MatN beta(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) beta(i, j) = betaT(j, i);
  std::vector<cplx> sb = lu_solve(beta, y2lc);
  cplx q2 = 0.0;
  double prod = 1.0;
  for (int i = 0; i < N; ++i) {
    q2 += e.g[i] * sb[i];
    prod *= std::norm(e.z[i]);
  }
  cplx a_n = prod / (1.0 + 2.0 * q2);
  m[1][0] *= a_n;
  m[1][1] *= a_n;
  return m;
}

MatN rogue_kernel_mu(int N, cplx z1) {
  // bivariate truncated series in u = k - z1 (cols) and w = y - conj z1 (rows)
  auto bimul = [N](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    std::vector<cplx> r(size_t(N) * N, cplx(0.0));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        cplx v = x[size_t(i) * N + j];
        if (v == cplx(0.0)) continue;
        for (int i2 = 0; i2 + i < N; ++i2)
          for (int j2 = 0; j2 + j < N; ++j2)
            r[size_t(i + i2) * N + (j + j2)] += v * y[size_t(i2) * N + j2];
      }
    return r;
  };
  cplx zb = std::conj(z1);
  std::vector<cplx> q(size_t(N) * N, cplx(0.0));  // (z1+u)(zb+w), rows w, cols u
  q[0] = z1 * zb;
  if (N > 1) {
    q[1] = zb;            // u
    q[size_t(N)] = z1;    // w
    q[size_t(N) + 1] = 1.0;
  }
  std::vector<cplx> q2 = bimul(q, q);
  cplx c0 = q2[0] - 1.0;
  std::vector<cplx> eps = q2;
  eps[0] = 0.0;
  for (auto& x : eps) x /= c0;
  std::vector<cplx> inv(size_t(N) * N, cplx(0.0)), pw(size_t(N) * N, cplx(0.0));
  pw[0] = 1.0;
  double sign = 1.0;
  for (int m = 0; m <= 2 * (N - 1); ++m) {
    for (size_t k = 0; k < inv.size(); ++k) inv[k] += sign * pw[k] / c0;
    pw = bimul(pw, eps);
    sign = -sign;
  }
  MatN mu(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) mu(i, j) = inv[size_t(i) * N + j];
  return mu;
}

cplx rogue_solution(int n, double t, int N, const ElementarySpec& spec) {
  const Params& p = spec.params;
  const double A = p.A;
  const cplx z1 = p.r() + A;
  auto [fc, gc] = taylor_coefficients(n, t, spec, N - 1);
  const cplx zb = std::conj(z1);
  MatN mu = rogue_kernel_mu(N, z1);

  auto toeplitz = [N](const std::vector<cplx>& c) {
    MatN m(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = c[i - j];
    return m;
  };
  MatN J1 = toeplitz(fc), K1 = toeplitz(gc);
  auto shift_mix = [N, z1](const MatN& m) {  // z1*M + M*E  (Toeplitz of z*series)
    MatN r(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j <= i; ++j) r(i, j) = z1 * m(i, j) + (j + 1 < N ? m(i, j + 1) : 0.0);
    return r;
  };
  MatN J2 = shift_mix(J1), K2 = shift_mix(K1);
  MatN F(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j)
      F(i, j) = ((i - j) % 2 == 0 ? 1.0 : -1.0) * std::pow(zb, -(i - j + 1));

  // Confluent limit of the distinct-point determinant form: rows carry the
  // conjugated series, columns the plain ones.
  auto conj_m = [N](const MatN& m) {
    MatN r(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = std::conj(m(i, j));
    return r;
  };
  auto transpose = [N](const MatN& m) {
    MatN r(N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = m(j, i);
    return r;
  };
  MatN T = mul(mul(conj_m(K1), mu), transpose(K1)) + mul(mul(conj_m(J2), mu), transpose(J2));
  MatN H = mul(mul(conj_m(J1), mu), transpose(J1)) + mul(mul(conj_m(K2), mu), transpose(K2));
  // rank-one term: (1/A) * (F conj(g)) f^T
  std::vector<cplx> fg(N, cplx(0.0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j) fg[i] += F(i, j) * std::conj(gc[j]);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) H(i, j) += fg[i] * fc[j] / A;

  cplx dT = lu_det(T);
  if (dT == cplx(0.0) || !std::isfinite(std::abs(dT)))
    throw SingularGram("rogue_solution: degenerate denominator");
  // orient so the field tends to +A at spatial infinity
  double orient = (N % 2 == 0) ? 1.0 : -1.0;
  return orient * A * lu_det(H) / dT;
}

std::vector<cplx> peak_tuned_constants(const std::vector<cplx>& zs, const Params& p,
                                       Sheet sheet, CutSide side) {
  std::vector<cplx> cs;
  cplx v_cur = p.A;
  DarbouxSystem accum;
  accum.params = p;
  accum.sheet = sheet;
  accum.side = side;
  for (cplx zk : zs) {
    // dressing map of the already-fixed points, evaluated at (0, 0, zk)
    Mat2 W;
    W[0][0] = 1.0; W[0][1] = 0.0; W[1][0] = 0.0; W[1][1] = 1.0;
    if (!accum.points.empty()) {
      W = nfold_matrix(accum, 0, 0.0, zk);
      v_cur = nfold_solution(accum, 0, 0.0);
    }

    double M = std::abs(v_cur);
    double R = std::sqrt(1.0 + M * M);
    double theta = std::arg(v_cur);
    cplx w_target = (R + M) * std::abs(zk) *
                    std::exp(cplx(0.0, std::arg(zk) - theta));
    cplx u = (w_target * W[0][0] - W[1][0]) / (W[1][1] - w_target * W[0][1]);

    SpectralScalars sp = eval_spectral(zk, p, sheet, side);
    cplx gamma = -0.5 * std::log(-sp.xi);
    cplx ck = std::atanh(std::tanh(gamma) * (1.0 - u) / (1.0 + u));
    cs.push_back(ck);
    accum.points.push_back({zk, ck, 1});
  }
  return cs;
}

}  // namespace hirota
