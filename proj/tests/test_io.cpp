#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hirota/io.hpp"

using namespace hirota;

namespace {

SolutionSpec small_soliton() {
  SolutionSpec s;
  s.family = SolutionSpec::Family::soliton1;
  s.params = Params{1.0, 0.5, 5.0 / 12.0, 0.0, 0.0, 0.0};
  s.zs = {cplx(1.8, 0.0)};
  s.peak_tuned = true;
  s.grid = {-12, 12, -2.0, 2.0, 21};
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spec validation points at the offending field") {
  SolutionSpec s = small_soliton();
  CHECK(validate_spec(s).empty());

  s.zs = {cplx(0.9, 0.0)};
  CHECK(validate_spec(s) == "zs[0]: |z| must exceed 1");
  s.zs = {cplx(1.8, 0.0), cplx(2.2, 0.0)};
  CHECK(validate_spec(s) == "zs: soliton1 takes exactly one spectral point");

  s = small_soliton();
  s.family = SolutionSpec::Family::nfold;
  s.zs = {cplx(1.8, 0.0), cplx(1.8, 0.0)};
  CHECK(validate_spec(s) == "zs[1]: duplicate spectral point");
  s.zs = {cplx(1.8, 0.0), cplx(2.2, 0.0)};
  s.cs = {cplx(0.0)};
  CHECK(validate_spec(s) == "cs: count must match zs (or be empty)");

  s = small_soliton();
  s.grid.t_steps = 1;
  CHECK(validate_spec(s) == "grid.t_steps: must be >= 2");
  s = small_soliton();
  s.grid.n_min = s.grid.n_max;
  CHECK(validate_spec(s) == "grid.n_min: must be < grid.n_max");
  s = small_soliton();
  s.params.A = -0.1;
  CHECK(validate_spec(s) == "params.A: must be >= 0");

  s = small_soliton();
  s.family = SolutionSpec::Family::rogue;
  s.zs.clear();
  s.order = 0;
  CHECK(validate_spec(s) == "order: must be >= 1");
}

TEST_CASE("constant resolution") {
  SolutionSpec s = small_soliton();
  SolutionSpec r = resolve_constants(s);
  REQUIRE(r.cs.size() == 1);
  CHECK(std::abs(r.cs[0]) > 0.0);  // peak tuning picks a nonzero shift here

  s.peak_tuned = false;
  r = resolve_constants(s);
  REQUIRE(r.cs.size() == 1);
  CHECK(r.cs[0] == cplx(0.0));

  s.cs = {cplx(0.3, -0.2)};
  r = resolve_constants(s);
  CHECK(r.cs[0] == cplx(0.3, -0.2));
}

TEST_CASE("grid evaluation matches pointwise evaluation and is thread stable") {
  SolutionSpec s = resolve_constants(small_soliton());
  setenv("HIROTA_THREADS", "1", 1);
  LatticeGrid g1 = evaluate_grid(s);
  setenv("HIROTA_THREADS", "3", 1);
  LatticeGrid g3 = evaluate_grid(s);
  unsetenv("HIROTA_THREADS");
  REQUIRE(g1.t_samples.size() == 21);
  for (size_t ti = 0; ti < g1.t_samples.size(); ++ti)
    for (int n = g1.n_min; n <= g1.n_max; ++n) {
      CHECK(g1.value(ti, n) == g3.value(ti, n));
      CHECK(std::abs(g1.value(ti, n) - evaluate_at(s, n, g1.t_samples[ti])) == 0.0);
    }
  GridStats st = grid_stats(g1);
  CHECK(st.max_n == 0);  // peak-tuned maximum sits at the origin
  CHECK(std::abs(st.max_t) < 1e-12);
  CHECK(st.max_abs == doctest::Approx(2.327119).epsilon(1e-4));
}

TEST_CASE("csv round trip is byte identical") {
  SolutionSpec s = resolve_constants(small_soliton());
  LatticeGrid g = evaluate_grid(s);
  const std::string p1 = "/tmp/hirota_io_a.csv", p2 = "/tmp/hirota_io_b.csv";
  write_grid_csv(p1, g);
  LatticeGrid back = read_grid_csv(p1);
  write_grid_csv(p2, back);
  std::string f1 = slurp(p1), f2 = slurp(p2);
  CHECK(!f1.empty());
  CHECK(f1 == f2);
  CHECK(f1.rfind("n,t,re_v,im_v,abs_v\n", 0) == 0);
  std::remove(p1.c_str());
  std::remove(p2.c_str());

  CHECK_THROWS_AS(read_grid_csv("/tmp/does_not_exist_hirota.csv"), NumericError);
}

TEST_CASE("json spec round trip is lossless") {
  SolutionSpec s;
  s.family = SolutionSpec::Family::nfold;
  s.params = Params{1.0, 0.5, 5.0 / 12.0, 1.5707963267948966, 0.1, -0.2};
  s.zs = {cplx(1.75, 0.0), cplx(1.75, -1.0)};
  s.cs = {cplx(0.25, 0.5), cplx(-0.125, 0.0625)};
  s.peak_tuned = false;
  s.grid = {-40, 40, -6.0, 6.0, 121};
  s.side = CutSide::above;
  std::string j1 = spec_to_json(s);
  SolutionSpec back = spec_from_json(j1);
  CHECK(spec_to_json(back) == j1);
  CHECK(back.zs == s.zs);
  CHECK(back.cs == s.cs);
  CHECK(back.side == CutSide::above);
  CHECK(back.grid.t_steps == 121);

  SolutionSpec r;
  r.family = SolutionSpec::Family::rogue;
  r.params = Params{1.0, 0.3, 23.0 / 60.0, 0.0, 0.0, 0.0};
  r.order = 3;
  r.c_tilde = CTilde::from_kappa(cplx(0.0, 4.0));
  std::string j2 = spec_to_json(r);
  SolutionSpec rb = spec_from_json(j2);
  CHECK(spec_to_json(rb) == j2);
  CHECK(rb.c_tilde.kind == CTilde::Kind::kappa_eta);
  CHECK(rb.c_tilde.kappa == cplx(0.0, 4.0));

  CHECK_THROWS_AS(spec_from_json("{\"family\":\"unknown\"}"), NumericError);
}

TEST_CASE("figure case lookup") {
  std::vector<FigureCase> all = figure_cases();
  CHECK(all.size() == 27);
  for (const FigureCase& c : all) CHECK(validate_spec(c.spec).empty());

  auto f4 = figure_case("fig4c");
  REQUIRE(f4.has_value());
  CHECK(f4->caption_value == doctest::Approx(4.05));
  CHECK(f4->tolerance == doctest::Approx(0.01));
  CHECK(f4->spec.family == SolutionSpec::Family::nfold);
  CHECK(f4->spec.zs.size() == 2);

  auto f8c = figure_case("fig8c", cplx(0.0, 2.0));
  REQUIRE(f8c.has_value());
  CHECK(f8c->caption_value == 0.0);  // no published number for the offset variant
  CHECK(f8c->spec.c_tilde.kappa == cplx(0.0, 2.0));

  CHECK(!figure_case("fig99").has_value());
}

TEST_CASE("svg heatmap has the expected skeleton") {
  SolutionSpec s = resolve_constants(small_soliton());
  s.grid = {-10, 10, -1.0, 1.0, 11};
  LatticeGrid g = evaluate_grid(s);
  const std::string path = "/tmp/hirota_io.svg";
  write_heatmap_svg(path, g);
  std::string svg = slurp(path);
  std::remove(path.c_str());
  CHECK(svg.rfind("<svg xmlns", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find(">n</text>") != std::string::npos);
  CHECK(svg.find(">t</text>") != std::string::npos);
  CHECK(svg.size() > 2000);
}
