#pragma once
#include <functional>
#include <vector>

#include "hirota/spectral.hpp"

namespace hirota {

struct TruncatedPotential {
  int n_min = 0, n_max = 0;
  std::vector<cplx> values;  // v_n for n in [n_min, n_max]
  Params params;

  cplx at(int n) const { return values[size_t(n - n_min)]; }
  int count() const { return n_max - n_min + 1; }
  // both edges must have settled to the background
  bool edges_settled(double tol = 1e-3) const;
};

struct JostPair {
  int n_min = 0;
  std::vector<Mat2> J_minus, J_plus;  // indexed n - n_min, n in [n_min, n_max+1]
  const Mat2& minus_at(int n) const { return J_minus[size_t(n - n_min)]; }
  const Mat2& plus_at(int n) const { return J_plus[size_t(n - n_min)]; }
};

struct ScatteringData {
  cplx z;
  cplx a_coeff, b_coeff, a_bar, b_bar;
  cplx reflection;
  double gamma_plus = 1.0, gamma_minus = 1.0;
  Mat2 jost_minus, jost_plus;  // at the reference site n = 0 (or n_min if 0 outside)
};

JostPair jost_solutions(const TruncatedPotential& pot, cplx z,
                        Sheet sheet = Sheet::principal, CutSide side = CutSide::none);

ScatteringData scattering_coeffs(const TruncatedPotential& pot, cplx z,
                                 Sheet sheet = Sheet::principal,
                                 CutSide side = CutSide::none, int n_ref = 0);

// Zeros of a(z) inside the annulus r_lo < |z| < r_hi (off the cut), found by
// winding-number counting over subdivided boxes plus Newton refinement.
std::vector<cplx> locate_eigenvalues(const TruncatedPotential& pot, double r_lo,
                                     double r_hi, Sheet sheet = Sheet::principal);

// Field sampled from an exact evaluator onto a truncated lattice window.
TruncatedPotential sample_potential(const std::function<cplx(int)>& field, int n_min,
                                    int n_max, const Params& p);

// Overwrite the boundary phases with those measured at the window edges.
// Dressing shifts the background phase differently on each side, so the edge
// values -- not the seed phases -- define the correct Jost boundary data.
void adopt_edge_phases(TruncatedPotential& pot);

}  // namespace hirota
