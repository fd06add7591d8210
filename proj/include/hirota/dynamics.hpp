#pragma once
#include <functional>
#include <vector>

#include "hirota/spectral.hpp"

namespace hirota {

// Field samples on a rectangular (n, t) window; columns share the t grid.
struct LatticeGrid {
  int n_min = 0, n_max = 0;
  std::vector<double> t_samples;
  std::vector<std::vector<cplx>> columns;  // columns[ti][n - n_min]

  cplx value(size_t ti, int n) const { return columns[ti][size_t(n - n_min)]; }
  int site_count() const { return n_max - n_min + 1; }
};

// Right-hand side of the lattice flow at one site.
cplx lattice_rhs(cplx v_prev, cplx v_cur, cplx v_next, const Params& p);

// Sup norm of the equation residual over interior grid nodes, with the time
// derivative taken by a fourth-order central stencil of spacing h.
double residual_sup(const LatticeGrid& grid, const Params& p, double h);

// Runge-Kutta propagation of the interior sites from the first column of
// `initial`; the two edge sites are forced to `exact(n, t)` at every stage.
LatticeGrid propagate_rk4(const std::vector<cplx>& initial,
                          const std::function<cplx(int, double)>& exact, int n_min,
                          double t0, double dt, int steps, const Params& p);

// Sup norm over the window of X_{n,t} + X_n T_n - T_{n+1} X_n at spectral
// parameter z, using the same fourth-order time stencil.
double lax_compatibility(const LatticeGrid& grid, cplx z, const Params& p, double h);

}  // namespace hirota
