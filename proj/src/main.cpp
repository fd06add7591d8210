#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirota/closedform.hpp"
#include "hirota/darboux.hpp"
#include "hirota/dynamics.hpp"
#include "hirota/io.hpp"
#include "hirota/scattering.hpp"

using namespace hirota;
using nlohmann::json;

namespace {

constexpr int kExitSpec = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerify = 4;
constexpr int kExitFigure = 5;

cplx parse_complex(const std::string& s) {
  std::string t = s;
  size_t comma = t.find(',');
  if (comma != std::string::npos)
    return cplx(std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1)));
  if (!t.empty() && t.back() == 'i') {
    t.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    for (size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        double re = std::stod(t.substr(0, k));
        std::string im = t.substr(k);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return cplx(re, std::stod(im));
      }
    }
    if (t.empty() || t == "+") return cplx(0.0, 1.0);
    if (t == "-") return cplx(0.0, -1.0);
    return cplx(0.0, std::stod(t));
  }
  return cplx(std::stod(t), 0.0);
}

std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  std::vector<std::string> tokens;
  {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) tokens.push_back(tok);
  }
  // a single token without 'i' may be a comma-separated list of reals
  if (tokens.size() == 1 && tokens[0].find('i') == std::string::npos &&
      tokens[0].find(',') != std::string::npos) {
    std::stringstream ss(tokens[0]);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(cplx(std::stod(tok), 0.0));
    return out;
  }
  for (const std::string& tok : tokens) out.push_back(parse_complex(tok));
  return out;
}

struct SpecFlags {
  std::string family = "background";
  double a = 1.0, b = 0.5, A = 5.0 / 12.0, B = 0.0;
  std::string zs, cs;
  bool peak = false;
  int order = 1;
  std::string kappa;
  int n_min = -30, n_max = 30;
  double t_min = -5.0, t_max = 5.0;
  int t_steps = 201;
  std::string sheet = "principal", side = "none";
  std::string spec_file;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
  cmd->add_option("--spec", f.spec_file, "JSON spec file (overrides other flags)");
  cmd->add_option("--family", f.family, "background|soliton1|nfold|rogue");
  cmd->add_option("--a", f.a, "second-order dispersion weight");
  cmd->add_option("--b", f.b, "third-order dispersion weight");
  cmd->add_option("--A", f.A, "background amplitude");
  cmd->add_option("--B", f.B, "background wavenumber (radians)");
  cmd->add_option("--z,--zs", f.zs, "spectral points, e.g. '1.8' or '1.3,1.8' or '1+0.9i;1-0.9i'");
  cmd->add_option("--c,--cs", f.cs, "translation constants (same syntax)");
  cmd->add_flag("--peak", f.peak, "peak-tune translation constants");
  cmd->add_option("--order", f.order, "rational-solution order");
  cmd->add_option("--kappa", f.kappa, "chi offset kappa (c = kappa*log zeta)");
  cmd->add_option("--n-min", f.n_min);
  cmd->add_option("--n-max", f.n_max);
  cmd->add_option("--t-min", f.t_min);
  cmd->add_option("--t-max", f.t_max);
  cmd->add_option("--t-steps", f.t_steps);
  cmd->add_option("--sheet", f.sheet, "principal|other");
  cmd->add_option("--side", f.side, "none|above|below (cut-side hint)");
}

SolutionSpec spec_from_flags(const SpecFlags& f) {
  if (!f.spec_file.empty()) {
    std::ifstream in(f.spec_file);
    if (!in) throw NumericError("cannot open spec file " + f.spec_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return spec_from_json(ss.str());
  }
  SolutionSpec spec;
  if (f.family == "background") spec.family = SolutionSpec::Family::background;
  else if (f.family == "soliton1") spec.family = SolutionSpec::Family::soliton1;
  else if (f.family == "nfold") spec.family = SolutionSpec::Family::nfold;
  else if (f.family == "rogue") spec.family = SolutionSpec::Family::rogue;
  else throw CLI::ValidationError("--family", "unknown family '" + f.family + "'");
  spec.params = Params{f.a, f.b, f.A, f.B, 0.0, 0.0};
  if (!f.zs.empty()) spec.zs = parse_complex_list(f.zs);
  if (!f.cs.empty()) spec.cs = parse_complex_list(f.cs);
  spec.peak_tuned = f.peak;
  spec.order = f.order;
  if (!f.kappa.empty()) spec.c_tilde = CTilde::from_kappa(parse_complex(f.kappa));
  spec.grid = {f.n_min, f.n_max, f.t_min, f.t_max, f.t_steps};
  spec.sheet = f.sheet == "other" ? Sheet::other : Sheet::principal;
  spec.side = f.side == "above" ? CutSide::above
              : f.side == "below" ? CutSide::below : CutSide::none;
  return spec;
}

int fail_spec(const std::string& msg) {
  std::cerr << "invalid spec: " << msg << "\n";
  return kExitSpec;
}

// ---------------------------------------------------------------- solution

int cmd_solution(const SpecFlags& flags, const std::string& out, bool svg, bool to_stdout) {
  SolutionSpec spec = spec_from_flags(flags);
  std::string err = validate_spec(spec);
  if (!err.empty()) return fail_spec(err);
  auto start = std::chrono::steady_clock::now();
  SolutionSpec resolved = resolve_constants(spec);
  LatticeGrid grid = evaluate_grid(resolved);
  GridStats st = grid_stats(grid);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_grid_csv(out + ".csv", grid);
  if (svg) write_heatmap_svg(out + ".svg", grid);
  json j;
  j["spec"] = json::parse(spec_to_json(resolved));
  j["max"] = {{"abs", st.max_abs}, {"n", st.max_n}, {"t", st.max_t}};
  j["runtime_seconds"] = secs;
  std::ofstream(out + ".json") << j.dump(2) << "\n";
  if (to_stdout) std::cout << j.dump(2) << "\n";
  else std::cerr << "wrote " << out << ".csv (max |v| = " << st.max_abs << ")\n";
  return 0;
}

// ------------------------------------------------------------------ verify

struct Check {
  std::string name;
  double measured = 0.0, threshold = 0.0;
  bool pass = false;
};

LatticeGrid stencil_grid(const SolutionSpec& spec, double center, double h, int half) {
  LatticeGrid g;
  g.n_min = spec.grid.n_min;
  g.n_max = spec.grid.n_max;
  for (int i = -half; i <= half; ++i) g.t_samples.push_back(center + i * h);
  for (double t : g.t_samples) {
    std::vector<cplx> col(size_t(g.site_count()));
    for (int n = g.n_min; n <= g.n_max; ++n)
      col[size_t(n - g.n_min)] = evaluate_at(spec, n, t);
    g.columns.push_back(std::move(col));
  }
  return g;
}

int cmd_verify(const SpecFlags& flags, bool residual, bool rk4, bool lax, bool scatter) {
  SolutionSpec spec0 = spec_from_flags(flags);
  std::string err = validate_spec(spec0);
  if (!err.empty()) return fail_spec(err);
  SolutionSpec spec = resolve_constants(spec0);
  const Params& p = spec.params;
  bool is_bg = spec.family == SolutionSpec::Family::background;
  bool is_rogue = spec.family == SolutionSpec::Family::rogue;
  std::vector<Check> checks;
  const double h = 1e-3;

  if (!(residual || rk4 || lax || scatter)) residual = rk4 = lax = scatter = true;

  if (residual) {
    double sup = 0.0;
    for (double c : {-2.0, -1.0, 0.0, 1.0, 2.0})
      sup = std::max(sup, residual_sup(stencil_grid(spec, c, h, 2), p, h));
    double thr = is_bg ? 1e-12 : is_rogue ? 1e-5 : 1e-7;
    checks.push_back({"residual", sup, thr, sup < thr});
  }
  if (rk4) {
    std::vector<cplx> init(size_t(spec.grid.n_max - spec.grid.n_min + 1));
    for (int n = spec.grid.n_min; n <= spec.grid.n_max; ++n)
      init[size_t(n - spec.grid.n_min)] = evaluate_at(spec, n, 0.0);
    auto exact = [&](int n, double t) { return evaluate_at(spec, n, t); };
    const double dt = 1e-3;
    const int steps = 2000;
    LatticeGrid run = propagate_rk4(init, exact, spec.grid.n_min, 0.0, dt, steps, p);
    double dev = 0.0;
    size_t last = run.t_samples.size() - 1;
    for (int n = spec.grid.n_min; n <= spec.grid.n_max; ++n)
      dev = std::max(dev, std::abs(run.value(last, n) -
                                   evaluate_at(spec, n, run.t_samples[last])));
    double thr = is_bg ? 1e-12 : is_rogue ? 1e-5 : 1e-6;
    checks.push_back({"rk4", dev, thr, dev < thr});
  }
  if (lax) {
    LatticeGrid g = stencil_grid(spec, 0.0, h, 2);
    double sup = 0.0;
    for (cplx z : {cplx(2.0, 0.0), cplx(0.7, 0.4), cplx(1.9, -0.3), cplx(0.4, -0.6),
                   cplx(2.4, 1.1)})
      sup = std::max(sup, lax_compatibility(g, z, p, h));
    double thr = is_bg ? 1e-12 : is_rogue ? 1e-5 : 1e-6;
    checks.push_back({"lax", sup, thr, sup < thr});
  }
  if (scatter) {
    TruncatedPotential pot = sample_potential(
        [&](int n) { return evaluate_at(spec, n, 0.0); }, -40, 40, p);
    adopt_edge_phases(pot);
    double edge = std::max(std::abs(pot.values.front()) - p.A,
                           std::abs(pot.values.back()) - p.A);
    checks.push_back({"scatter_edges", std::abs(edge), 1e-3, std::abs(edge) < 1e-3});
    std::vector<cplx> planted;
    if (spec.family == SolutionSpec::Family::soliton1 ||
        spec.family == SolutionSpec::Family::nfold)
      for (cplx z : spec.zs)
        if (std::abs(z) > p.r() + p.A + 0.05) planted.push_back(z);
    if (!planted.empty()) {
      double lo = p.r() + p.A + 0.05, hi = 0.0;
      for (cplx z : planted) hi = std::max(hi, std::abs(z));
      hi += 0.3;
      std::vector<cplx> eigs = locate_eigenvalues(pot, lo, hi);
      double worst = 0.0;
      for (cplx z : planted) {
        double best = 1e300;
        for (cplx e : eigs) best = std::min(best, std::abs(e - z));
        worst = std::max(worst, best);
      }
      double thr = planted.size() > 1 ? 1e-5 : 1e-6;
      checks.push_back({"scatter_eigenvalues", worst, thr, worst < thr});
    } else if (is_bg) {
      std::vector<cplx> eigs = locate_eigenvalues(pot, p.r() + p.A + 0.05,
                                                  p.r() + p.A + 1.5);
      checks.push_back({"scatter_no_spurious", double(eigs.size()), 0.5, eigs.empty()});
    }
  }

  json rep;
  rep["checks"] = json::array();
  bool all = true;
  std::string first_fail;
  for (const Check& c : checks) {
    rep["checks"].push_back({{"name", c.name},
                             {"measured", c.measured},
                             {"threshold", c.threshold},
                             {"pass", c.pass}});
    if (!c.pass && first_fail.empty()) first_fail = c.name;
    all &= c.pass;
  }
  rep["pass"] = all;
  std::cout << rep.dump(2) << "\n";
  if (!all) {
    std::cerr << "verification failed: " << first_fail << "\n";
    return kExitVerify;
  }
  return 0;
}

// ------------------------------------------------------------------ maxamp

int cmd_maxamp(double A, const std::string& zs_str, int order, bool table, bool to_json) {
  json j;
  if (table) {
    struct Row {
      const char* label;
      double caption, tol, computed;
    };
    double A512 = 5.0 / 12.0;
    std::vector<Row> rows = {
        {"fig2c", 0.85, 0.01, max_amplitude_iterated({1.2}, A512)},
        {"fig2d", 2.33, 0.01, max_amplitude_iterated({1.8}, A512)},
        {"fig3c", 1.07, 0.01, max_amplitude_iterated({1.3}, A512)},
        {"fig3d", 1.79, 0.01, max_amplitude_iterated({1.6}, A512)},
        {"fig4c", 4.05, 0.01, max_amplitude_iterated({1.3, 1.8}, A512)},
        {"fig4d", 2.36, 0.01,
         max_amplitude_iterated({cplx(1.0, 0.9), cplx(1.0, -0.9)}, A512)},
        {"fig5c", 9.3, 0.1, max_amplitude_iterated({1.75, cplx(1.75, -1.0)}, A512)},
        {"fig5d", 11.6, 0.1, max_amplitude_iterated({1.75, 2.25}, A512)},
        {"fig6", 5.89, 0.01, max_amplitude_iterated({1.25, 2.25}, A512)},
        {"fig7", 0.57, 0.01, rogue_max(1, 11.0 / 60.0)},
        {"fig8b", 6.84, 0.01, rogue_max(3, 23.0 / 60.0)},
        {"fig9b", 9.02, 0.01, rogue_max(4, 18.0 / 55.0)},
    };
    j["table"] = json::array();
    bool all = true;
    for (const Row& r : rows) {
      bool pass = std::abs(r.computed - r.caption) <= r.tol;
      all &= pass;
      j["table"].push_back({{"id", r.label},
                            {"caption", r.caption},
                            {"computed", r.computed},
                            {"tolerance", r.tol},
                            {"pass", pass}});
      if (!to_json)
        std::printf("%-6s caption %5.2f computed %10.6f tol %.2f %s\n", r.label,
                    r.caption, r.computed, r.tol, pass ? "pass" : "FAIL");
    }
    j["pass"] = all;
    if (to_json) std::cout << j.dump(2) << "\n";
    return all ? 0 : kExitVerify;
  }

  std::vector<cplx> zs;
  if (!zs_str.empty()) zs = parse_complex_list(zs_str);
  else zs.assign(size_t(order), cplx(std::sqrt(1.0 + A * A) + A, 0.0));
  for (cplx z : zs)
    if (std::abs(z) <= 1.0) return fail_spec("zs: |z| must exceed 1");

  j["A"] = A;
  j["steps"] = json::array();
  double M = A;
  for (size_t k = 0; k < zs.size(); ++k) {
    Params pk{1.0, 0.0, M, 0.0, 0.0, 0.0};
    cplx c1;
    try {
      auto mc = max_amplitude(zs[k], pk, CutSide::above);
      c1 = mc.second;
      M = mc.first;
    } catch (const NumericError&) {
      M = max_amplitude_iterated({zs[k]}, M);
      c1 = cplx(0.0);
    }
    j["steps"].push_back({{"k", k + 1},
                          {"z", {zs[k].real(), zs[k].imag()}},
                          {"M", M},
                          {"c", {c1.real(), c1.imag()}}});
    if (!to_json)
      std::printf("M_%zu = %.12f  (z = %g%+gi, c = %g%+gi)\n", k + 1, M, zs[k].real(),
                  zs[k].imag(), c1.real(), c1.imag());
  }
  if (to_json) std::cout << j.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ figure

int cmd_figure(const std::string& id, const std::string& out_dir, const std::string& k8,
               const std::string& k9, bool to_json) {
  cplx kappa8 = k8.empty() ? cplx(0.0, 4.0) : parse_complex(k8);
  cplx kappa9 = k9.empty() ? cplx(0.0, 0.1) : parse_complex(k9);
  auto fc = figure_case(id, kappa8, kappa9);
  if (!fc) return fail_spec("id: unknown figure id '" + id + "'");
  auto start = std::chrono::steady_clock::now();
  SolutionSpec resolved = resolve_constants(fc->spec);
  LatticeGrid grid = evaluate_grid(resolved);
  GridStats st = grid_stats(grid);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string base = out_dir + "/" + id;
  write_grid_csv(base + ".csv", grid);
  write_heatmap_svg(base + ".svg", grid);
  json j;
  j["id"] = id;
  j["spec"] = json::parse(spec_to_json(resolved));
  j["max"] = {{"abs", st.max_abs}, {"n", st.max_n}, {"t", st.max_t}};
  j["runtime_seconds"] = secs;
  bool pass = true;
  if (fc->tolerance > 0.0) {
    pass = std::abs(st.max_abs - fc->caption_value) <= fc->tolerance;
    j["caption"] = {{"value", fc->caption_value},
                    {"tolerance", fc->tolerance},
                    {"pass", pass}};
  } else {
    j["caption"] = nullptr;
  }
  std::ofstream(base + ".json") << j.dump(2) << "\n";
  if (to_json) std::cout << j.dump(2) << "\n";
  else
    std::cerr << id << ": max |v| = " << st.max_abs
              << (fc->tolerance > 0.0 ? (pass ? " (caption pass)" : " (caption FAIL)") : "")
              << "\n";
  if (!pass) {
    std::cerr << id << ": computed max " << st.max_abs << " misses caption "
              << fc->caption_value << " by more than " << fc->tolerance << "\n";
    return kExitFigure;
  }
  return 0;
}

// ---------------------------------------------------------------- spectral

int cmd_spectral(const std::string& z_str, double a, double b, double A, double B,
                 const std::string& sheet, const std::string& side_str, bool to_json) {
  Params p{a, b, A, B, 0.0, 0.0};
  cplx z = parse_complex(z_str);
  Sheet sh = sheet == "other" ? Sheet::other : Sheet::principal;
  CutSide side = side_str == "above" ? CutSide::above
                 : side_str == "below" ? CutSide::below : CutSide::none;
  SpectralScalars s = eval_spectral(z, p, sh, side);
  RegionTag tag = classify_region(z, p);
  const char* region = tag == RegionTag::Sigma_plus ? "Sigma_plus"
                       : tag == RegionTag::Sigma_minus ? "Sigma_minus"
                       : tag == RegionTag::Omega_0 ? "Omega_0"
                       : tag == RegionTag::Omega_in ? "Omega_in"
                       : tag == RegionTag::Omega_out ? "Omega_out" : "BranchPoint";
  if (to_json) {
    json j;
    j["z"] = {z.real(), z.imag()};
    j["region"] = region;
    j["zeta"] = {s.zeta.real(), s.zeta.imag()};
    j["xi"] = {s.xi.real(), s.xi.imag()};
    j["omega"] = {s.omega.real(), s.omega.imag()};
    j["eta"] = {s.eta.real(), s.eta.imag()};
    j["delta"] = {s.delta.real(), s.delta.imag()};
    j["D"] = {s.D.real(), s.D.imag()};
    j["r"] = p.r();
    j["C"] = p.C();
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("region %s\n", region);
    std::printf("zeta  = %.17g %+.17gi\n", s.zeta.real(), s.zeta.imag());
    std::printf("xi    = %.17g %+.17gi\n", s.xi.real(), s.xi.imag());
    std::printf("omega = %.17g %+.17gi\n", s.omega.real(), s.omega.imag());
    std::printf("eta   = %.17g %+.17gi\n", s.eta.real(), s.eta.imag());
    std::printf("delta = %.17g %+.17gi\n", s.delta.real(), s.delta.imag());
    std::printf("D     = %.17g %+.17gi\n", s.D.real(), s.D.imag());
  }
  return 0;
}

// ----------------------------------------------------------------- scatter

int cmd_scatter(const SpecFlags& flags, const std::string& csv, double t_sample,
                int win_lo, int win_hi, const std::string& annulus,
                const std::string& z_eval, bool to_json) {
  TruncatedPotential pot;
  Params p;
  if (!csv.empty()) {
    LatticeGrid g = read_grid_csv(csv);
    size_t ti = 0;
    double best = 1e300;
    for (size_t i = 0; i < g.t_samples.size(); ++i)
      if (std::abs(g.t_samples[i] - t_sample) < best) {
        best = std::abs(g.t_samples[i] - t_sample);
        ti = i;
      }
    SpecFlags pf = flags;
    p = Params{pf.a, pf.b, pf.A, pf.B, 0.0, 0.0};
    pot = sample_potential([&](int n) { return g.value(ti, n); }, g.n_min, g.n_max, p);
  } else {
    SolutionSpec spec = spec_from_flags(flags);
    std::string err = validate_spec(spec);
    if (!err.empty()) return fail_spec(err);
    SolutionSpec resolved = resolve_constants(spec);
    p = resolved.params;
    pot = sample_potential([&](int n) { return evaluate_at(resolved, n, t_sample); },
                           win_lo, win_hi, p);
  }
  adopt_edge_phases(pot);

  json j;
  j["window"] = {pot.n_min, pot.n_max};
  j["edges_settled"] = pot.edges_settled();
  double lo = p.r() + p.A + 0.05, hi = lo + 1.5;
  if (!annulus.empty()) {
    size_t comma = annulus.find(',');
    if (comma == std::string::npos) return fail_spec("annulus: expected 'lo,hi'");
    lo = std::stod(annulus.substr(0, comma));
    hi = std::stod(annulus.substr(comma + 1));
  }
  std::vector<cplx> eigs = locate_eigenvalues(pot, lo, hi);
  j["annulus"] = {lo, hi};
  j["eigenvalues"] = json::array();
  for (cplx e : eigs) j["eigenvalues"].push_back({e.real(), e.imag()});
  if (!z_eval.empty()) {
    cplx z = parse_complex(z_eval);
    ScatteringData sd = scattering_coeffs(pot, z);
    double target = 1.0;
    for (int l = pot.n_min; l <= pot.n_max; ++l)
      target *= (p.r() * p.r()) / (1.0 + std::norm(pot.at(l)));
    cplx detS = sd.a_coeff * sd.a_bar + sd.b_coeff * sd.b_bar;
    j["at_z"] = {{"z", {z.real(), z.imag()}},
                 {"a", {sd.a_coeff.real(), sd.a_coeff.imag()}},
                 {"b", {sd.b_coeff.real(), sd.b_coeff.imag()}},
                 {"reflection", {sd.reflection.real(), sd.reflection.imag()}},
                 {"detS_error", std::abs(detS - target)}};
  }
  if (to_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("window [%d, %d], edges settled: %s\n", pot.n_min, pot.n_max,
                pot.edges_settled() ? "yes" : "no");
    std::printf("eigenvalues in (%g, %g):\n", lo, hi);
    for (cplx e : eigs) std::printf("  %.12f %+.3ei\n", e.real(), e.imag());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-field solution builder and verifier"};
  app.require_subcommand(1);

  SpecFlags sol_flags;
  std::string sol_out = "solution";
  bool sol_svg = false, sol_json = false;
  CLI::App* sol = app.add_subcommand("solution", "evaluate a field on a grid");
  add_spec_flags(sol, sol_flags);
  sol->add_option("--out", sol_out, "output basename");
  sol->add_flag("--svg", sol_svg, "also write an SVG heatmap");
  sol->add_flag("--json", sol_json, "print the JSON summary to stdout");

  SpecFlags ver_flags;
  bool v_res = false, v_rk4 = false, v_lax = false, v_sc = false;
  CLI::App* ver = app.add_subcommand("verify", "run verification checks");
  add_spec_flags(ver, ver_flags);
  ver->add_flag("--residual", v_res, "equation residual check");
  ver->add_flag("--rk4", v_rk4, "independent integrator check");
  ver->add_flag("--lax", v_lax, "linear-system compatibility check");
  ver->add_flag("--scatter", v_sc, "direct-scattering round trip");

  double ma_A = 5.0 / 12.0;
  std::string ma_zs;
  int ma_order = 1;
  bool ma_table = false, ma_json = false;
  CLI::App* ma = app.add_subcommand("maxamp", "amplitude recursion table");
  ma->add_option("--A", ma_A, "background amplitude");
  ma->add_option("--zs", ma_zs, "spectral points");
  ma->add_option("--order", ma_order, "number of steps at z = r+A");
  ma->add_flag("--figure-table", ma_table, "print the twelve published maxima vs computed");
  ma->add_flag("--json", ma_json);

  std::string fig_id, fig_dir = ".", fig_k8, fig_k9;
  bool fig_json = false;
  CLI::App* fig = app.add_subcommand("figure", "reproduce a published dataset");
  fig->add_option("--id", fig_id, "fig2a..fig9c")->required();
  fig->add_option("--out-dir", fig_dir);
  fig->add_option("--kappa8", fig_k8, "offset kappa for fig8c");
  fig->add_option("--kappa9", fig_k9, "offset kappa for fig9c");
  fig->add_flag("--json", fig_json);

  std::string sp_z;
  double sp_a = 1.0, sp_b = 0.5, sp_A = 5.0 / 12.0, sp_B = 0.0;
  std::string sp_sheet = "principal", sp_side = "none";
  bool sp_json = false;
  CLI::App* sp = app.add_subcommand("spectral", "uniformization scalars at one z");
  sp->add_option("--z", sp_z, "spectral point")->required();
  sp->add_option("--a", sp_a);
  sp->add_option("--b", sp_b);
  sp->add_option("--A", sp_A);
  sp->add_option("--B", sp_B);
  sp->add_option("--sheet", sp_sheet);
  sp->add_option("--side", sp_side);
  sp->add_flag("--json", sp_json);

  SpecFlags sc_flags;
  std::string sc_csv, sc_annulus, sc_z;
  double sc_t = 0.0;
  int sc_lo = -40, sc_hi = 40;
  bool sc_json = false;
  CLI::App* sc = app.add_subcommand("scatter", "direct scattering of a potential");
  add_spec_flags(sc, sc_flags);
  sc->add_option("--csv", sc_csv, "grid CSV with the potential");
  sc->add_option("--t", sc_t, "sampling time");
  sc->add_option("--win-lo", sc_lo);
  sc->add_option("--win-hi", sc_hi);
  sc->add_option("--annulus", sc_annulus, "eigenvalue search annulus 'lo,hi'");
  sc->add_option("--eval-z", sc_z, "report coefficients at this z");
  sc->add_flag("--json", sc_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitSpec;
  }

  try {
    if (sol->parsed()) return cmd_solution(sol_flags, sol_out, sol_svg, sol_json);
    if (ver->parsed()) return cmd_verify(ver_flags, v_res, v_rk4, v_lax, v_sc);
    if (ma->parsed()) return cmd_maxamp(ma_A, ma_zs, ma_order, ma_table, ma_json);
    if (fig->parsed()) return cmd_figure(fig_id, fig_dir, fig_k8, fig_k9, fig_json);
    if (sp->parsed())
      return cmd_spectral(sp_z, sp_a, sp_b, sp_A, sp_B, sp_sheet, sp_side, sp_json);
    if (sc->parsed())
      return cmd_scatter(sc_flags, sc_csv, sc_t, sc_lo, sc_hi, sc_annulus, sc_z, sc_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitSpec;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
