#pragma once
#include <vector>

#include "hirota/linalg.hpp"
#include "hirota/seed.hpp"
#include "hirota/spectral.hpp"

namespace hirota {

// z* in the unit-circle sense used by every dressing formula.
inline cplx star(cplx z) { return 1.0 / std::conj(z); }

struct DarbouxPoint {
  cplx z;
  cplx c;
  int multiplicity = 1;
};

struct DarbouxSystem {
  std::vector<DarbouxPoint> points;
  Params params;
  Sheet sheet = Sheet::principal;
  CutSide side = CutSide::none;
};

// One-step dressing of the field value (same lattice site and time).
cplx fundamental_dt(cplx v, cplx z1, cplx f1, cplx g1);

// Dressing matrix of the one-step transformation, evaluated at spectral point z.
Mat2 darboux_matrix_v1(cplx z, cplx z1, cplx f1, cplx g1);

// Field value of the N-point dressed solution over the constant background A
// (determinant form; eigenvectors built from seed eigenvectors).
cplx nfold_solution(const DarbouxSystem& sys, int n, double t);

// Same field value through the Gram/bordered form; used as a cross-check.
cplx nfold_solution_gram(const DarbouxSystem& sys, int n, double t);

// N-point dressing matrix evaluated at spectral point z; its kernel at z = z_i
// contains the i-th eigenvector.
Mat2 nfold_matrix(const DarbouxSystem& sys, int n, double t, cplx z);

// Rogue solution of order N built from Taylor data at z1 = r + A.
cplx rogue_solution(int n, double t, int N, const ElementarySpec& spec);

// Mixed Taylor coefficients of 1/(k^2 y^2 - 1) around (k, y) = (z1, conj z1);
// entry (i, j) multiplies (y - conj z1)^i (k - z1)^j.
MatN rogue_kernel_mu(int N, cplx z1);

// Translation constants that put the global maximum of the N-point solution at
// (n, t) = (0, 0): sequential dress-and-retune with the single-step optimum.
std::vector<cplx> peak_tuned_constants(const std::vector<cplx>& zs, const Params& p,
                                       Sheet sheet = Sheet::principal,
                                       CutSide side = CutSide::none);

}  // namespace hirota
