#pragma once
#include <utility>
#include <vector>

#include "hirota/jet.hpp"
#include "hirota/spectral.hpp"

namespace hirota {

// Constant chi-offset for the normalized background solution. Either a power
// series in (z - z1) with vanishing constant term, or kappa * log(zeta(z)).
struct CTilde {
  enum class Kind { zero, series, kappa_eta } kind = Kind::zero;
  std::vector<cplx> series;  // coefficients in (z - z1), series[0] must be 0
  cplx kappa = 0.0;

  static CTilde zero() { return {}; }
  static CTilde from_series(std::vector<cplx> s) {
    CTilde c;
    c.kind = Kind::series;
    c.series = std::move(s);
    return c;
  }
  static CTilde from_kappa(cplx k) {
    CTilde c;
    c.kind = Kind::kappa_eta;
    c.kappa = k;
    return c;
  }
};

struct ElementarySpec {
  int n0 = 0;
  double t0 = 0.0;
  CTilde c_tilde;
  Params params;
};

struct Eigenfunction {
  cplx z_i;
  cplx c_i;
  cplx f_i, g_i;
  cplx kappa_i, gamma_i;
};

// Normalized background solution of the linear system: identity at (n0, t0).
Mat2 phi_elementary(int n, double t, cplx z, const ElementarySpec& spec,
                    Sheet sheet = Sheet::principal, CutSide side = CutSide::none);

// Eigenvector (f, g) = (sinh(kappa+gamma), -sinh(kappa-gamma)) of the
// background linear system at spectral point z_i, translation constant c_i.
Eigenfunction eigenvector(int n, double t, cplx z_i, cplx c_i, const Params& p,
                          Sheet sheet = Sheet::principal, CutSide side = CutSide::none);

// Taylor coefficients of f, g at z1 = r+A (removable branch point), orders 0..N,
// of the seed vector phi_elementary * (1, (r+A)z)^T.
std::pair<std::vector<cplx>, std::vector<cplx>> taylor_coefficients(
    int n, double t, const ElementarySpec& spec, int N);

}  // namespace hirota
