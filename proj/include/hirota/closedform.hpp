#pragma once
#include <vector>

#include "hirota/darboux.hpp"
#include "hirota/spectral.hpp"

namespace hirota {

struct SolitonProfile {
  cplx z1, c1;
  cplx gamma1;
  // denominator / numerator exponential coefficients in X = kappa + conj kappa
  // and Y = kappa - conj kappa
  cplx p1, q1, p2, q2;
  cplx n1p, n1m, n2p, n2m;
};

struct AsymptoticProfile {
  int k = 0;
  double s_k = 0.0;        // velocity of the k-th component
  cplx kappa_shift;        // additive shift of kappa_k in the limit profile
  double Gamma = 0.0;      // constant phase of the limit profile
  double c_rate = 0.0;     // decay exponent of the remainder
};

// Single dressed-solution field value, direct closed form.
cplx soliton1(int n, double t, cplx z1, cplx c1, const Params& p,
              Sheet sheet = Sheet::principal, CutSide side = CutSide::none);

SolitonProfile soliton1_profile(cplx z1, cplx c1, const Params& p,
                                Sheet sheet = Sheet::principal,
                                CutSide side = CutSide::none);

double soliton_velocity(cplx z1, const Params& p, Sheet sheet = Sheet::principal,
                        CutSide side = CutSide::none);

// Limit profile of the k-th component of an N-point solution along its own
// ray, sign = +1 for t -> +inf and -1 for t -> -inf.
cplx asymptotic_soliton(int k, const DarbouxSystem& sys, int n, double t, int sign);

AsymptoticProfile asymptotic_profile(int k, const DarbouxSystem& sys, int sign);

// Largest field modulus of the one-point solution and the translation constant
// that attains it at (n, t) = (0, 0).
std::pair<double, cplx> max_amplitude(cplx z1, const Params& p,
                                      CutSide side = CutSide::none);

// Sequentially applied single-step maximum over a list of spectral points.
double max_amplitude_iterated(const std::vector<cplx>& zs, double A);

// Same recursion with all points at z = r + A.
double rogue_max(int N, double A);

}  // namespace hirota
