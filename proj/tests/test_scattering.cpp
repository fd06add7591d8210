#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hirota/closedform.hpp"
#include "hirota/darboux.hpp"
#include "hirota/scattering.hpp"

using namespace hirota;

namespace {

const double pi = 3.14159265358979323846;
std::mt19937 rng(41205);

Params base() { return Params{1.0, 0.5, 5.0 / 12.0, 0.0, 0.0, 0.0}; }

cplx random_off_cut() {
  std::uniform_real_distribution<double> mag(0.4, 2.8), ang(0.0, 2.0 * pi);
  for (;;) {
    cplx z = std::polar(mag(rng), ang(rng));
    if (std::abs(z.imag()) > 0.05) return z;
  }
}

TruncatedPotential background_window(const Params& p, int L) {
  return sample_potential(
      [&](int) { return p.A * std::exp(cplx(0.0, p.B)); }, -L, L, p);
}

TruncatedPotential soliton_window(const std::vector<cplx>& zs, const Params& p, int L) {
  std::vector<cplx> cs = peak_tuned_constants(zs, p);
  DarbouxSystem sys;
  sys.params = p;
  for (size_t i = 0; i < zs.size(); ++i) sys.points.push_back({zs[i], cs[i], 1});
  TruncatedPotential pot = sample_potential(
      [&](int n) { return nfold_solution(sys, n, 0.0); }, -L, L, p);
  adopt_edge_phases(pot);
  return pot;
}

double closest(const std::vector<cplx>& found, cplx target) {
  double best = 1e300;
  for (cplx f : found) best = std::min(best, std::abs(f - target));
  return best;
}

}  // namespace

TEST_CASE("pure background scatters trivially") {
  Params p = base();
  p.b = 0.3;
  TruncatedPotential pot = background_window(p, 30);
  CHECK(pot.edges_settled());
  for (int k = 0; k < 12; ++k) {
    cplx z = random_off_cut();
    ScatteringData sd = scattering_coeffs(pot, z);
    CHECK(std::abs(sd.a_coeff - 1.0) < 1e-10);
    JostPair jp = jost_solutions(pot, z);
    // the column recursed against its growth direction is the stable one:
    // second for the forward pass, first for the backward pass
    for (int n = -30; n <= 31; n += 10)
      for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(jp.minus_at(n)[i][1] - jp.plus_at(31)[i][1]) <
              1e-9 * std::max(1.0, std::abs(jp.plus_at(31)[i][1])));
        CHECK(std::abs(jp.plus_at(n)[i][0] - jp.minus_at(-30)[i][0]) <
              1e-9 * std::max(1.0, std::abs(jp.minus_at(-30)[i][0])));
      }
  }
  // reflection lives on the continuous spectrum, where both columns are stable
  for (double x : {0.8, 1.1, 1.4}) {
    ScatteringData sd = scattering_coeffs(pot, cplx(x, 0.0), Sheet::principal,
                                          CutSide::above);
    CHECK(std::abs(sd.b_coeff) < 1e-10);
    CHECK(std::abs(sd.reflection) < 1e-10);
  }
}

TEST_CASE("scattering coefficients carry the z to minus z symmetry") {
  Params p = base();
  TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
  for (int k = 0; k < 16; ++k) {
    cplx z = random_off_cut();
    ScatteringData sp = scattering_coeffs(pot, z);
    ScatteringData sm = scattering_coeffs(pot, -z);
    double sa = std::max(1.0, std::abs(sp.a_coeff));
    double sb = std::max(1.0, std::abs(sp.b_coeff));
    CHECK(std::abs(sp.a_coeff - sm.a_coeff) < 1e-9 * sa);
    CHECK(std::abs(sp.b_coeff + sm.b_coeff) < 1e-9 * sb);
  }
}

TEST_CASE("transmission is independent of the matching site") {
  Params p = base();
  TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
  cplx z(2.1, 0.6);
  cplx a0 = scattering_coeffs(pot, z, Sheet::principal, CutSide::none, 0).a_coeff;
  for (int n_ref : {-10, -3, 7, 10}) {
    cplx an = scattering_coeffs(pot, z, Sheet::principal, CutSide::none, n_ref).a_coeff;
    CHECK(std::abs(an - a0) < 1e-7 * std::abs(a0));
  }
}

TEST_CASE("one-sided cut limits pair up") {
  Params p = base();  // cut band [2/3, 3/2]
  TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
  for (double x : {0.8, 1.2, 1.4}) {
    cplx z(x, 0.0);
    ScatteringData up = scattering_coeffs(pot, z, Sheet::principal, CutSide::above);
    ScatteringData dn = scattering_coeffs(pot, -z, Sheet::principal, CutSide::below);
    CHECK(std::abs(up.a_coeff - dn.a_coeff) < 1e-8 * std::max(1.0, std::abs(up.a_coeff)));
    // the bar coefficients are the conjugate limits on the cut
    CHECK(std::abs(up.a_bar - std::conj(up.a_coeff)) <
          1e-8 * std::max(1.0, std::abs(up.a_coeff)));
    CHECK_THROWS_AS(scattering_coeffs(pot, z), CutAmbiguity);
  }
}

TEST_CASE("scattering determinant equals the window mass product") {
  Params p = base();
  TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
  double prod = 1.0;
  for (int l = pot.n_min; l <= pot.n_max; ++l)
    prod *= p.r() * p.r() / (1.0 + std::norm(pot.at(l)));
  for (double x : {0.9, 1.2, 1.35}) {
    ScatteringData sd = scattering_coeffs(pot, cplx(x, 0.0), Sheet::principal,
                                          CutSide::above);
    cplx detS = sd.a_coeff * sd.a_bar + sd.b_coeff * sd.b_bar;
    CHECK(std::abs(detS - prod) < 1e-9 * std::abs(prod));
  }
}

TEST_CASE("cut evaluation without a side hint is rejected") {
  Params p = base();
  TruncatedPotential pot = background_window(p, 20);
  CHECK_THROWS_AS(scattering_coeffs(pot, cplx(1.5, 0.0)), CutAmbiguity);
  CHECK_THROWS_AS(scattering_coeffs(pot, cplx(1.2, 0.0)), CutAmbiguity);
}

TEST_CASE("eigenvalue location recovers the dressing points") {
  SUBCASE("single component") {
    Params p = base();
    TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
    std::vector<cplx> ev = locate_eigenvalues(pot, 1.55, 2.1);
    CHECK(closest(ev, cplx(1.8, 0.0)) < 1e-6);
    CHECK(closest(ev, cplx(-1.8, 0.0)) < 1e-6);  // zeros come in +- pairs
  }
  SUBCASE("two real components") {
    Params p = base();
    TruncatedPotential pot = soliton_window({cplx(1.75, 0.0), cplx(2.25, 0.0)}, p, 40);
    std::vector<cplx> ev = locate_eigenvalues(pot, 1.55, 2.55);
    CHECK(closest(ev, cplx(1.75, 0.0)) < 1e-5);
    CHECK(closest(ev, cplx(2.25, 0.0)) < 1e-5);
  }
  SUBCASE("small background") {
    Params p{1.0, 0.5, 0.2, 0.0, 0.0, 0.0};  // cut band [0.82, 1.22]
    TruncatedPotential pot = soliton_window({cplx(1.3, 0.0), cplx(1.8, 0.0)}, p, 40);
    std::vector<cplx> ev = locate_eigenvalues(pot, 1.27, 2.1);
    CHECK(closest(ev, cplx(1.3, 0.0)) < 1e-5);
    CHECK(closest(ev, cplx(1.8, 0.0)) < 1e-5);
  }
}

TEST_CASE("wider windows sharpen the recovered eigenvalue") {
  Params p = base();
  double e20, e40;
  {
    TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 20);
    e20 = closest(locate_eigenvalues(pot, 1.55, 2.1), cplx(1.8, 0.0));
  }
  {
    TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
    e40 = closest(locate_eigenvalues(pot, 1.55, 2.1), cplx(1.8, 0.0));
  }
  CHECK(e40 < e20);
  CHECK(e40 < 1e-8);
}

TEST_CASE("edge bookkeeping") {
  Params p = base();
  TruncatedPotential pot = soliton_window({cplx(1.8, 0.0)}, p, 40);
  CHECK(pot.edges_settled());
  CHECK(pot.params.B_minus == doctest::Approx(std::arg(pot.values.front())));
  CHECK(pot.params.B_plus == doctest::Approx(std::arg(pot.values.back())));
  // a window chopped mid-soliton has not settled
  TruncatedPotential tight = soliton_window({cplx(1.8, 0.0)}, p, 2);
  CHECK(!tight.edges_settled());
  TruncatedPotential empty;
  empty.params = p;
  CHECK_THROWS_AS(adopt_edge_phases(empty), ZeroArgument);
}
