#include "hirota/scattering.hpp"

#include <cmath>

namespace hirota {

namespace {

Mat2 transfer(cplx z, cplx v) {
  Mat2 x;
  x[0][0] = z;
  x[0][1] = v;
  x[1][0] = -std::conj(v);
  x[1][1] = 1.0 / z;
  return x;
}

Mat2 transfer_inv(cplx z, cplx v) {
  cplx det = 1.0 + std::norm(v);
  Mat2 x;
  x[0][0] = (1.0 / z) / det;
  x[0][1] = -v / det;
  x[1][0] = std::conj(v) / det;
  x[1][1] = z / det;
  return x;
}

void check_overflow(const Mat2& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(std::abs(m[i][j]) < 1e250))
        throw Overflow("jost_solutions: recursion overflow, shrink the window");
}

}  // namespace

bool TruncatedPotential::edges_settled(double tol) const {
  cplx bg_m = params.A * std::exp(cplx(0.0, params.B_minus));
  cplx bg_p = params.A * std::exp(cplx(0.0, params.B_plus));
  return std::abs(values.front() - bg_m) < tol && std::abs(values.back() - bg_p) < tol;
}

JostPair jost_solutions(const TruncatedPotential& pot, cplx z, Sheet sheet, CutSide side) {
  const Params& p = pot.params;
  SpectralScalars s = eval_spectral(z, p, sheet, side);
  const double r = p.r();
  cplx m0 = r * s.zeta, m1 = r / s.zeta;

  auto boundary = [&](double Bpm) {
    Mat2 g;
    cplx ph = std::exp(cplx(0.0, 0.5 * Bpm));
    g[0][0] = ph;
    g[0][1] = ph * s.xi;
    g[1][0] = s.xi / ph;
    g[1][1] = 1.0 / ph;
    return g;
  };

  const int count = pot.count() + 1;  // sites n_min .. n_max+1
  JostPair jp;
  jp.n_min = pot.n_min;
  jp.J_minus.resize(count);
  jp.J_plus.resize(count);

  jp.J_minus[0] = boundary(p.B_minus);
  for (int k = 0; k + 1 < count; ++k) {
    Mat2 x = transfer(s.z, pot.values[size_t(k)]);
    Mat2 next = mat_mul(x, jp.J_minus[size_t(k)]);
    next[0][0] /= m0;
    next[1][0] /= m0;
    next[0][1] /= m1;
    next[1][1] /= m1;
    check_overflow(next);
    jp.J_minus[size_t(k + 1)] = next;
  }

  jp.J_plus[size_t(count - 1)] = boundary(p.B_plus);
  for (int k = count - 2; k >= 0; --k) {
    Mat2 xi = transfer_inv(s.z, pot.values[size_t(k)]);
    Mat2 prev = jp.J_plus[size_t(k + 1)];
    prev[0][0] *= m0;
    prev[1][0] *= m0;
    prev[0][1] *= m1;
    prev[1][1] *= m1;
    prev = mat_mul(xi, prev);
    check_overflow(prev);
    jp.J_plus[size_t(k)] = prev;
  }
  return jp;
}

ScatteringData scattering_coeffs(const TruncatedPotential& pot, cplx z, Sheet sheet,
                                 CutSide side, int n_ref) {
  const Params& p = pot.params;
  SpectralScalars s = eval_spectral(z, p, sheet, side);
  cplx one_m_xi2 = 1.0 - s.xi * s.xi;
  if (std::abs(one_m_xi2) < 1e-8)
    throw BranchPointDegeneracy("scattering_coeffs: 1 - xi^2 vanishes");

  JostPair jp = jost_solutions(pot, z, sheet, side);
  if (n_ref < pot.n_min) n_ref = pot.n_min;
  if (n_ref > pot.n_max) n_ref = pot.n_max;

  const double r2 = p.r() * p.r();
  double gamma_plus = 1.0;
  for (int l = n_ref; l <= pot.n_max; ++l)
    gamma_plus *= r2 / (1.0 + std::norm(pot.at(l)));
  double gamma_minus = 1.0;
  for (int l = pot.n_min; l < n_ref; ++l)
    gamma_minus *= (1.0 + std::norm(pot.at(l))) / r2;

  const Mat2& jm = jp.minus_at(n_ref);
  const Mat2& jpl = jp.plus_at(n_ref);
  auto det2 = [](cplx a0, cplx a1, cplx b0, cplx b1) { return a0 * b1 - a1 * b0; };
  cplx denom = one_m_xi2 * gamma_minus;
  cplx z2n = std::pow(s.zeta, 2 * n_ref);

  ScatteringData sd;
  sd.z = z;
  sd.a_coeff = det2(jpl[0][0], jpl[1][0], jm[0][1], jm[1][1]) / denom;
  sd.a_bar = det2(jm[0][0], jm[1][0], jpl[0][1], jpl[1][1]) / denom;
  sd.b_coeff = det2(jm[0][1], jm[1][1], jpl[0][1], jpl[1][1]) / (z2n * denom);
  sd.b_bar = -det2(jpl[0][0], jpl[1][0], jm[0][0], jm[1][0]) * z2n / denom;
  sd.reflection = sd.b_coeff / sd.a_coeff;
  sd.gamma_plus = gamma_plus;
  sd.gamma_minus = gamma_minus;
  sd.jost_minus = jm;
  sd.jost_plus = jpl;
  return sd;
}

namespace {

struct PolarBox {
  double r0, r1, th0, th1;
};

// winding number of a(z) along the closed boundary of a polar box
int winding(const TruncatedPotential& pot, Sheet sheet, const PolarBox& b) {
  auto eval_a = [&](double rr, double th) {
    return scattering_coeffs(pot, std::polar(rr, th), sheet).a_coeff;
  };
  std::vector<cplx> samples;
  const int m = 24;
  for (int e = 0; e < 4; ++e) {
    for (int i = 0; i < m; ++i) {
      double u = double(i) / m;
      double rr, th;
      switch (e) {
        case 0: rr = b.r0 + (b.r1 - b.r0) * u; th = b.th0; break;
        case 1: rr = b.r1; th = b.th0 + (b.th1 - b.th0) * u; break;
        case 2: rr = b.r1 - (b.r1 - b.r0) * u; th = b.th1; break;
        default: rr = b.r0; th = b.th1 - (b.th1 - b.th0) * u; break;
      }
      samples.push_back(eval_a(rr, th));
    }
  }
  samples.push_back(samples.front());
  double total = 0.0;
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    double d = std::arg(samples[i + 1] / samples[i]);
    total += d;
  }
  return int(std::lround(total / (2.0 * 3.14159265358979323846)));
}

cplx newton_zero(const TruncatedPotential& pot, Sheet sheet, cplx z0) {
  auto a_of = [&](cplx z) { return scattering_coeffs(pot, z, sheet).a_coeff; };
  cplx z = z0;
  const double step = 1e-6;
  for (int it = 0; it < 50; ++it) {
    cplx f, d;
    try {
      f = a_of(z);
      d = (a_of(z + step) - a_of(z - step)) / (2.0 * step);
    } catch (const CutAmbiguity&) {
      throw NonConvergence("locate_eigenvalues: iterate landed on the cut");
    }
    if (d == cplx(0.0)) break;
    cplx dz = f / d;
    z -= dz;
    if (std::abs(dz) < 1e-12) return z;
  }
  cplx f = a_of(z);
  if (std::abs(f) < 1e-9) return z;
  throw NonConvergence("locate_eigenvalues: Newton stalled");
}

}  // namespace

namespace {

// Hunt zeros inside one polar box: winding count, then a Newton shot from the
// center accepted only when the root stays inside (slightly inflated) box;
// otherwise subdivide.  Returns false when a claimed zero could not be pinned.
bool hunt_box(const TruncatedPotential& pot, Sheet sheet, const PolarBox& b,
              int depth, std::vector<cplx>& found) {
  int w;
  try {
    w = winding(pot, sheet, b);
  } catch (const NumericError&) {
    w = -1;  // sampling failed (cut crossing etc.): force subdivision
  }
  if (w == 0) return true;
  if (w > 0) {
    cplx center = std::polar(0.5 * (b.r0 + b.r1), 0.5 * (b.th0 + b.th1));
    try {
      cplx root = newton_zero(pot, sheet, center);
      double mr = 0.2 * (b.r1 - b.r0), mt = 0.2 * (b.th1 - b.th0);
      double rr = std::abs(root);
      double dth = std::remainder(std::arg(root) - 0.5 * (b.th0 + b.th1),
                                  2.0 * 3.14159265358979323846);
      if (rr >= b.r0 - mr && rr <= b.r1 + mr &&
          std::abs(dth) <= 0.5 * (b.th1 - b.th0) + mt) {
        bool dup = false;
        for (cplx f : found)
          if (std::abs(f - root) < 1e-6) dup = true;
        if (!dup) found.push_back(root);
        return true;
      }
    } catch (const NonConvergence&) {
    }
  }
  if (depth == 0) return false;
  double rm = 0.5 * (b.r0 + b.r1), tm = 0.5 * (b.th0 + b.th1);
  bool ok = true;
  ok &= hunt_box(pot, sheet, {b.r0, rm, b.th0, tm}, depth - 1, found);
  ok &= hunt_box(pot, sheet, {rm, b.r1, b.th0, tm}, depth - 1, found);
  ok &= hunt_box(pot, sheet, {b.r0, rm, tm, b.th1}, depth - 1, found);
  ok &= hunt_box(pot, sheet, {rm, b.r1, tm, b.th1}, depth - 1, found);
  return ok;
}

}  // namespace

std::vector<cplx> locate_eigenvalues(const TruncatedPotential& pot, double r_lo,
                                     double r_hi, Sheet sheet) {
  const double pi = 3.14159265358979323846;
  std::vector<cplx> found;
  int n_r = std::max(2, int(std::ceil((r_hi - r_lo) / 0.2)));
  int n_th = 16;
  bool all_pinned = true;
  for (int ir = 0; ir < n_r; ++ir) {
    double r0 = r_lo + (r_hi - r_lo) * ir / n_r;
    double r1 = r_lo + (r_hi - r_lo) * (ir + 1) / n_r;
    for (int it = 0; it < n_th; ++it) {
      // offset so box corners avoid the real axis where the symmetry pairs sit
      double th0 = -pi + 2.0 * pi * it / n_th - pi / (2 * n_th);
      double th1 = th0 + 2.0 * pi / n_th;
      all_pinned &= hunt_box(pot, sheet, {r0, r1, th0, th1}, 5, found);
    }
  }
  if (!all_pinned && found.empty())
    throw NonConvergence("locate_eigenvalues: winding count never resolved");
  return found;
}

TruncatedPotential sample_potential(const std::function<cplx(int)>& field, int n_min,
                                    int n_max, const Params& p) {
  TruncatedPotential pot;
  pot.n_min = n_min;
  pot.n_max = n_max;
  pot.params = p;
  pot.values.reserve(size_t(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) pot.values.push_back(field(n));
  return pot;
}

void adopt_edge_phases(TruncatedPotential& pot) {
  if (pot.values.empty()) throw ZeroArgument("adopt_edge_phases: empty window");
  pot.params.B_minus = std::arg(pot.values.front());
  pot.params.B_plus = std::arg(pot.values.back());
}

}  // namespace hirota
