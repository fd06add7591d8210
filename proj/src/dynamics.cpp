#include "hirota/dynamics.hpp"

#include <cmath>

namespace hirota {

cplx lattice_rhs(cplx v_prev, cplx v_cur, cplx v_next, const Params& p) {
  const cplx I(0.0, 1.0);
  cplx eB = std::exp(I * p.B);
  cplx hop = (p.a + I * p.b) * v_next * eB + (p.a - I * p.b) * v_prev / eB;
  double r2 = 1.0 + p.A * p.A;
  cplx onsite = 2.0 * r2 * (p.a * std::cos(p.B) - p.b * std::sin(p.B)) * v_cur;
  return -I * ((1.0 + std::norm(v_cur)) * hop - onsite);
}

namespace {

// fourth-order central derivative of column data in t
cplx dt4(const LatticeGrid& g, size_t ti, int n, double h) {
  return (-g.value(ti + 2, n) + 8.0 * g.value(ti + 1, n) - 8.0 * g.value(ti - 1, n) +
          g.value(ti - 2, n)) /
         (12.0 * h);
}

}  // namespace

double residual_sup(const LatticeGrid& grid, const Params& p, double h) {
  if (grid.t_samples.size() < 5 || grid.site_count() < 3)
    throw GridTooSparse("residual_sup: need >= 5 time samples and >= 3 sites");
  for (size_t i = 0; i + 1 < grid.t_samples.size(); ++i)
    if (std::abs(grid.t_samples[i + 1] - grid.t_samples[i] - h) > 1e-12 * std::max(1.0, std::abs(h)))
      throw GridTooSparse("residual_sup: non-uniform time grid");
  double sup = 0.0;
  for (size_t ti = 2; ti + 2 < grid.t_samples.size(); ++ti) {
    for (int n = grid.n_min + 1; n < grid.n_max; ++n) {
      cplx vt = dt4(grid, ti, n, h);
      cplx f = lattice_rhs(grid.value(ti, n - 1), grid.value(ti, n),
                           grid.value(ti, n + 1), p);
      sup = std::max(sup, std::abs(vt - f));
    }
  }
  return sup;
}

LatticeGrid propagate_rk4(const std::vector<cplx>& initial,
                          const std::function<cplx(int, double)>& exact, int n_min,
                          double t0, double dt, int steps, const Params& p) {
  const int sites = static_cast<int>(initial.size());
  if (sites < 3) throw GridTooSparse("propagate_rk4: need >= 3 sites");
  LatticeGrid grid;
  grid.n_min = n_min;
  grid.n_max = n_min + sites - 1;
  grid.t_samples.reserve(size_t(steps) + 1);
  grid.columns.reserve(size_t(steps) + 1);

  auto deriv = [&](const std::vector<cplx>& v, double t) {
    std::vector<cplx> d(v.size(), cplx(0.0));
    for (int i = 1; i + 1 < sites; ++i) {
      cplx vm = (i == 1) ? exact(n_min, t) : v[size_t(i - 1)];
      cplx vp = (i + 2 == sites) ? exact(grid.n_max, t) : v[size_t(i + 1)];
      d[size_t(i)] = lattice_rhs(vm, v[size_t(i)], vp, p);
    }
    return d;
  };

  std::vector<cplx> v = initial;
  v.front() = exact(n_min, t0);
  v.back() = exact(grid.n_max, t0);
  grid.t_samples.push_back(t0);
  grid.columns.push_back(v);

  for (int s = 0; s < steps; ++s) {
    double t = t0 + s * dt;
    std::vector<cplx> k1 = deriv(v, t);
    std::vector<cplx> tmp(v.size());
    for (size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + 0.5 * dt * k1[i];
    std::vector<cplx> k2 = deriv(tmp, t + 0.5 * dt);
    for (size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + 0.5 * dt * k2[i];
    std::vector<cplx> k3 = deriv(tmp, t + 0.5 * dt);
    for (size_t i = 0; i < v.size(); ++i) tmp[i] = v[i] + dt * k3[i];
    std::vector<cplx> k4 = deriv(tmp, t + dt);
    for (size_t i = 0; i < v.size(); ++i)
      v[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    double tn = t0 + (s + 1) * dt;
    v.front() = exact(n_min, tn);
    v.back() = exact(grid.n_max, tn);
    for (cplx x : v)
      if (!(std::abs(x) < 1e6)) throw Blowup("propagate_rk4: solution blew up");
    grid.t_samples.push_back(tn);
    grid.columns.push_back(v);
  }
  return grid;
}

namespace {

Mat2 lax_x(cplx z, cplx v) {
  Mat2 x;
  x[0][0] = z;
  x[0][1] = v;
  x[1][0] = -std::conj(v);
  x[1][1] = 1.0 / z;
  return x;
}

Mat2 lax_t(cplx z, cplx v_cur, cplx v_prev, const Params& p) {
  const cplx I(0.0, 1.0);
  cplx eB = std::exp(I * p.B);
  cplx eB2 = std::exp(I * 0.5 * p.B);
  cplx am = p.b - I * p.a, ap = p.b + I * p.a;
  cplx w = z * eB2 - (1.0 / z) / eB2;
  cplx w2 = w * w;
  double C = p.C();
  Mat2 m;
  m[0][0] = am * v_cur * std::conj(v_prev) * eB - I * p.a / 2.0 * w2 +
            p.b * z * z * eB - I * C / 2.0;
  m[0][1] = am * v_cur * z * eB + ap * v_prev / (z * eB);
  m[1][0] = -ap * std::conj(v_cur) / (z * eB) - am * std::conj(v_prev) * z * eB;
  m[1][1] = ap * std::conj(v_cur) * v_prev / eB + I * p.a / 2.0 * w2 +
            p.b / (z * z * eB) + I * C / 2.0;
  return m;
}

}  // namespace

double lax_compatibility(const LatticeGrid& grid, cplx z, const Params& p, double h) {
  if (grid.t_samples.size() < 5 || grid.site_count() < 3)
    throw GridTooSparse("lax_compatibility: need >= 5 time samples and >= 3 sites");
  if (z == cplx(0.0)) throw ZeroArgument("lax_compatibility: z = 0");
  double sup = 0.0;
  for (size_t ti = 2; ti + 2 < grid.t_samples.size(); ++ti) {
    for (int n = grid.n_min + 1; n < grid.n_max; ++n) {
      cplx vt = dt4(grid, ti, n, h);
      Mat2 xt;  // only the off-diagonal entries of X depend on t
      xt[0][0] = 0.0;
      xt[0][1] = vt;
      xt[1][0] = -std::conj(vt);
      xt[1][1] = 0.0;
      Mat2 x = lax_x(z, grid.value(ti, n));
      Mat2 tn = lax_t(z, grid.value(ti, n), grid.value(ti, n - 1), p);
      Mat2 tn1 = lax_t(z, grid.value(ti, n + 1), grid.value(ti, n), p);
      Mat2 res = mat_mul(x, tn);
      Mat2 rhs = mat_mul(tn1, x);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          sup = std::max(sup, std::abs(xt[i][j] + res[i][j] - rhs[i][j]));
    }
  }
  return sup;
}

}  // namespace hirota
