#pragma once
#include <array>
#include <cmath>
#include <complex>

#include "hirota/errors.hpp"

namespace hirota {

using cplx = std::complex<double>;

// Background/dispersion constants shared by every module.
struct Params {
  double a = 1.0;       // second-order dispersion weight
  double b = 0.0;       // third-order dispersion weight
  double A = 0.0;       // background amplitude, >= 0
  double B = 0.0;       // background wavenumber
  double B_plus = 0.0;  // asymptotic phase, n -> +inf
  double B_minus = 0.0; // asymptotic phase, n -> -inf

  double r() const { return std::sqrt(1.0 + A * A); }
  double C() const {
    return 2.0 * a * (1.0 - (1.0 + A * A) * std::cos(B)) +
           2.0 * b * (1.0 + A * A) * std::sin(B);
  }
  // branch points of the uniformization: +-(r+A), +-(r-A)
  std::array<double, 4> branch_points() const {
    double rr = r();
    return {rr + A, rr - A, -(rr - A), -(rr + A)};
  }
};

enum class Sheet { principal, other };  // principal: |zeta| <= 1

// Side hint for evaluation exactly on the spectral cut (limit from +i0 / -i0).
enum class CutSide { none, above, below };

struct SpectralScalars {
  cplx z;
  Sheet sheet = Sheet::principal;
  cplx zeta;
  cplx xi;
  cplx omega;  // = r(zeta - 1/zeta)/2
  cplx delta;
  cplx D;
  cplx eta;  // log zeta, branch-consistent with the sheet
};

enum class RegionTag { Sigma_plus, Sigma_minus, Omega_0, Omega_in, Omega_out, BranchPoint };

SpectralScalars eval_spectral(cplx z, const Params& p, Sheet sheet = Sheet::principal,
                              CutSide side = CutSide::none);

RegionTag classify_region(cplx z, const Params& p);

// diag(exp(+phase), exp(-phase)) times the scalar background factor; identity at t = 0
struct Mat2 {
  cplx m[2][2];
  cplx* operator[](int i) { return m[i]; }
  const cplx* operator[](int i) const { return m[i]; }
};

Mat2 time_phase(double t, cplx z, const Params& p, Sheet sheet = Sheet::principal);

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

inline cplx mat_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Mat2 mat_inv(const Mat2& a) {
  cplx d = mat_det(a);
  Mat2 c;
  c[0][0] = a[1][1] / d;
  c[0][1] = -a[0][1] / d;
  c[1][0] = -a[1][0] / d;
  c[1][1] = a[0][0] / d;
  return c;
}

}  // namespace hirota
