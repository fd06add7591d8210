#include "hirota/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hirota/closedform.hpp"

namespace hirota {

namespace {

using nlohmann::json;

const char* family_name(SolutionSpec::Family f) {
  switch (f) {
    case SolutionSpec::Family::background: return "background";
    case SolutionSpec::Family::soliton1: return "soliton1";
    case SolutionSpec::Family::nfold: return "nfold";
    case SolutionSpec::Family::rogue: return "rogue";
  }
  return "?";
}

json cplx_json(cplx v) { return json::array({v.real(), v.imag()}); }
cplx cplx_from(const json& j) { return cplx(j.at(0).get<double>(), j.at(1).get<double>()); }

}  // namespace

std::string validate_spec(const SolutionSpec& spec) {
  const Params& p = spec.params;
  if (!(p.A >= 0.0)) return "params.A: must be >= 0";
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.B))
    return "params: non-finite entry";
  if (spec.grid.n_min >= spec.grid.n_max) return "grid.n_min: must be < grid.n_max";
  if (spec.grid.t_steps < 2) return "grid.t_steps: must be >= 2";
  if (!(spec.grid.t_min < spec.grid.t_max)) return "grid.t_min: must be < grid.t_max";
  switch (spec.family) {
    case SolutionSpec::Family::background:
      break;
    case SolutionSpec::Family::soliton1:
      if (spec.zs.size() != 1) return "zs: soliton1 takes exactly one spectral point";
      if (std::abs(spec.zs[0]) <= 1.0) return "zs[0]: |z| must exceed 1";
      break;
    case SolutionSpec::Family::nfold: {
      if (spec.zs.empty()) return "zs: nfold needs at least one spectral point";
      for (size_t i = 0; i < spec.zs.size(); ++i) {
        if (std::abs(spec.zs[i]) <= 1.0) return "zs[" + std::to_string(i) + "]: |z| must exceed 1";
        for (size_t j = 0; j < i; ++j)
          if (std::abs(spec.zs[i] - spec.zs[j]) < 1e-12)
            return "zs[" + std::to_string(i) + "]: duplicate spectral point";
      }
      if (!spec.cs.empty() && spec.cs.size() != spec.zs.size())
        return "cs: count must match zs (or be empty)";
      break;
    }
    case SolutionSpec::Family::rogue:
      if (spec.order < 1) return "order: must be >= 1";
      if (spec.c_tilde.kind == CTilde::Kind::series && !spec.c_tilde.series.empty() &&
          spec.c_tilde.series[0] != cplx(0.0))
        return "c_tilde.series[0]: constant term must vanish";
      break;
  }
  return "";
}

SolutionSpec resolve_constants(const SolutionSpec& spec) {
  SolutionSpec out = spec;
  bool wants = spec.family == SolutionSpec::Family::soliton1 ||
               spec.family == SolutionSpec::Family::nfold;
  if (!wants || out.cs.size() == out.zs.size()) return out;
  if (spec.peak_tuned)
    out.cs = peak_tuned_constants(out.zs, out.params, out.sheet, out.side);
  else
    out.cs.assign(out.zs.size(), cplx(0.0));
  return out;
}

cplx evaluate_at(const SolutionSpec& spec, int n, double t) {
  switch (spec.family) {
    case SolutionSpec::Family::background:
      return cplx(spec.params.A);
    case SolutionSpec::Family::soliton1:
      return soliton1(n, t, spec.zs[0], spec.cs[0], spec.params, spec.sheet, spec.side);
    case SolutionSpec::Family::nfold: {
      DarbouxSystem sys;
      sys.params = spec.params;
      sys.sheet = spec.sheet;
      sys.side = spec.side;
      for (size_t i = 0; i < spec.zs.size(); ++i)
        sys.points.push_back({spec.zs[i], spec.cs[i], 1});
      return nfold_solution(sys, n, t);
    }
    case SolutionSpec::Family::rogue: {
      ElementarySpec es;
      es.params = spec.params;
      es.c_tilde = spec.c_tilde;
      return rogue_solution(n, t, spec.order, es);
    }
  }
  return 0.0;
}

LatticeGrid evaluate_grid(const SolutionSpec& spec_in) {
  SolutionSpec spec = resolve_constants(spec_in);
  LatticeGrid grid;
  grid.n_min = spec.grid.n_min;
  grid.n_max = spec.grid.n_max;
  const int T = spec.grid.t_steps;
  grid.t_samples.resize(size_t(T));
  for (int i = 0; i < T; ++i)
    grid.t_samples[size_t(i)] =
        spec.grid.t_min + (spec.grid.t_max - spec.grid.t_min) * i / (T - 1);
  grid.columns.assign(size_t(T), std::vector<cplx>(size_t(grid.site_count())));

  unsigned nthreads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HIROTA_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) nthreads = unsigned(v);
  }
  if (nthreads < 1) nthreads = 1;
  nthreads = std::min<unsigned>(nthreads, unsigned(T));

  std::vector<std::thread> pool;
  std::vector<std::string> errors(nthreads);
  for (unsigned w = 0; w < nthreads; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int ti = int(w); ti < T; ti += int(nthreads)) {
          double t = grid.t_samples[size_t(ti)];
          for (int n = grid.n_min; n <= grid.n_max; ++n)
            grid.columns[size_t(ti)][size_t(n - grid.n_min)] = evaluate_at(spec, n, t);
        }
      } catch (const std::exception& e) {
        errors[w] = e.what();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw NumericError(e);
  return grid;
}

GridStats grid_stats(const LatticeGrid& grid) {
  GridStats st;
  for (size_t ti = 0; ti < grid.t_samples.size(); ++ti)
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
      double m = std::abs(grid.value(ti, n));
      if (m > st.max_abs) {
        st.max_abs = m;
        st.max_n = n;
        st.max_t = grid.t_samples[ti];
      }
    }
  return st;
}

void write_grid_csv(const std::string& path, const LatticeGrid& grid) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw NumericError("write_grid_csv: cannot open " + path);
  std::fputs("n,t,re_v,im_v,abs_v\n", f);
  for (size_t ti = 0; ti < grid.t_samples.size(); ++ti)
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
      cplx v = grid.value(ti, n);
      std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g\n", n, grid.t_samples[ti], v.real(),
                   v.imag(), std::abs(v));
    }
  std::fclose(f);
}

LatticeGrid read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NumericError("read_grid_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,t,", 0) != 0)
    throw NumericError("read_grid_csv: missing header in " + path);
  struct Row {
    int n;
    double t;
    cplx v;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row r;
    double re, im, mag;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf", &r.n, &r.t, &re, &im, &mag) != 5)
      throw NumericError("read_grid_csv: bad row '" + line + "'");
    r.v = cplx(re, im);
    rows.push_back(r);
  }
  if (rows.empty()) throw NumericError("read_grid_csv: no data rows");
  LatticeGrid grid;
  grid.n_min = rows[0].n;
  grid.n_max = rows[0].n;
  for (const Row& r : rows) {
    grid.n_min = std::min(grid.n_min, r.n);
    grid.n_max = std::max(grid.n_max, r.n);
  }
  for (const Row& r : rows)
    if (r.n == grid.n_min) grid.t_samples.push_back(r.t);
  grid.columns.assign(grid.t_samples.size(),
                      std::vector<cplx>(size_t(grid.site_count())));
  size_t idx = 0;
  for (size_t ti = 0; ti < grid.t_samples.size(); ++ti)
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
      if (idx >= rows.size() || rows[idx].n != n)
        throw NumericError("read_grid_csv: grid is not rectangular");
      grid.columns[ti][size_t(n - grid.n_min)] = rows[idx].v;
      ++idx;
    }
  if (idx != rows.size()) throw NumericError("read_grid_csv: trailing rows");
  return grid;
}

namespace {

// 256-entry palette interpolated from fixed anchors (dark violet to yellow).
struct Rgb {
  int r, g, b;
};
std::vector<Rgb> build_palette() {
  static const Rgb anchors[] = {{68, 1, 84},    {71, 44, 122},  {59, 81, 139},
                                {44, 113, 142}, {33, 144, 141}, {39, 173, 129},
                                {92, 200, 99},  {170, 220, 50}, {253, 231, 37}};
  const int na = int(sizeof(anchors) / sizeof(anchors[0]));
  std::vector<Rgb> pal(256);
  for (int i = 0; i < 256; ++i) {
    double x = i / 255.0 * (na - 1);
    int k = std::min(na - 2, int(x));
    double u = x - k;
    pal[size_t(i)] = {int(anchors[k].r + u * (anchors[k + 1].r - anchors[k].r)),
                      int(anchors[k].g + u * (anchors[k + 1].g - anchors[k].g)),
                      int(anchors[k].b + u * (anchors[k + 1].b - anchors[k].b))};
  }
  return pal;
}

}  // namespace

void write_heatmap_svg(const std::string& path, const LatticeGrid& grid) {
  const int cols = grid.site_count();
  const int rows = int(grid.t_samples.size());
  const double cw = std::max(2.0, 720.0 / cols);
  const double ch = std::max(2.0, 480.0 / rows);
  const double ml = 56, mb = 44, mt = 12, mr = 12;
  const double W = ml + cols * cw + mr, H = mt + rows * ch + mb;
  GridStats st = grid_stats(grid);
  double scale = st.max_abs > 0.0 ? st.max_abs : 1.0;
  std::vector<Rgb> pal = build_palette();

  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw NumericError("write_heatmap_svg: cannot open " + path);
  std::fprintf(f,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
               "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
               W, H, W, H);
  std::fprintf(f, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", W, H);
  for (int ti = 0; ti < rows; ++ti)
    for (int c = 0; c < cols; ++c) {
      double m = std::abs(grid.columns[size_t(ti)][size_t(c)]);
      int idx = std::min(255, std::max(0, int(m / scale * 255.0)));
      const Rgb& col = pal[size_t(idx)];
      // t increases upward
      double x = ml + c * cw, y = mt + (rows - 1 - ti) * ch;
      std::fprintf(f,
                   "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                   "fill=\"rgb(%d,%d,%d)\"/>\n",
                   x, y, cw + 0.5, ch + 0.5, col.r, col.g, col.b);
    }
  std::fprintf(f,
               "<text x=\"%.0f\" y=\"%.0f\" font-size=\"14\" "
               "text-anchor=\"middle\">n</text>\n",
               ml + cols * cw / 2, H - 8);
  std::fprintf(f,
               "<text x=\"14\" y=\"%.0f\" font-size=\"14\" text-anchor=\"middle\" "
               "transform=\"rotate(-90 14 %.0f)\">t</text>\n",
               mt + rows * ch / 2, mt + rows * ch / 2);
  std::fprintf(f, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"11\">%d</text>\n", ml,
               H - mb + 16, grid.n_min);
  std::fprintf(f, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"11\" text-anchor=\"end\">%d</text>\n",
               ml + cols * cw, H - mb + 16, grid.n_max);
  std::fprintf(f, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"11\" text-anchor=\"end\">%g</text>\n",
               ml - 4, mt + rows * ch, grid.t_samples.front());
  std::fprintf(f, "<text x=\"%.0f\" y=\"%.0f\" font-size=\"11\" text-anchor=\"end\">%g</text>\n",
               ml - 4, mt + 10, grid.t_samples.back());
  std::fputs("</svg>\n", f);
  std::fclose(f);
}

std::string spec_to_json(const SolutionSpec& spec) {
  json j;
  j["family"] = family_name(spec.family);
  j["params"] = {{"a", spec.params.a},       {"b", spec.params.b},
                 {"A", spec.params.A},       {"B", spec.params.B},
                 {"B_plus", spec.params.B_plus}, {"B_minus", spec.params.B_minus}};
  j["zs"] = json::array();
  for (cplx z : spec.zs) j["zs"].push_back(cplx_json(z));
  j["cs"] = json::array();
  for (cplx c : spec.cs) j["cs"].push_back(cplx_json(c));
  j["peak_tuned"] = spec.peak_tuned;
  j["order"] = spec.order;
  json ct;
  switch (spec.c_tilde.kind) {
    case CTilde::Kind::zero: ct["kind"] = "zero"; break;
    case CTilde::Kind::series: {
      ct["kind"] = "series";
      ct["series"] = json::array();
      for (cplx c : spec.c_tilde.series) ct["series"].push_back(cplx_json(c));
      break;
    }
    case CTilde::Kind::kappa_eta:
      ct["kind"] = "kappa_eta";
      ct["kappa"] = cplx_json(spec.c_tilde.kappa);
      break;
  }
  j["c_tilde"] = ct;
  j["grid"] = {{"n_min", spec.grid.n_min},   {"n_max", spec.grid.n_max},
               {"t_min", spec.grid.t_min},   {"t_max", spec.grid.t_max},
               {"t_steps", spec.grid.t_steps}};
  j["sheet"] = spec.sheet == Sheet::principal ? "principal" : "other";
  j["side"] = spec.side == CutSide::none ? "none"
              : spec.side == CutSide::above ? "above" : "below";
  return j.dump(2);
}

SolutionSpec spec_from_json(const std::string& text) {
  json j = json::parse(text);
  SolutionSpec spec;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "background") spec.family = SolutionSpec::Family::background;
  else if (fam == "soliton1") spec.family = SolutionSpec::Family::soliton1;
  else if (fam == "nfold") spec.family = SolutionSpec::Family::nfold;
  else if (fam == "rogue") spec.family = SolutionSpec::Family::rogue;
  else throw NumericError("spec_from_json: unknown family '" + fam + "'");
  const json& p = j.at("params");
  spec.params.a = p.at("a").get<double>();
  spec.params.b = p.at("b").get<double>();
  spec.params.A = p.at("A").get<double>();
  spec.params.B = p.at("B").get<double>();
  spec.params.B_plus = p.value("B_plus", 0.0);
  spec.params.B_minus = p.value("B_minus", 0.0);
  for (const json& z : j.value("zs", json::array())) spec.zs.push_back(cplx_from(z));
  for (const json& c : j.value("cs", json::array())) spec.cs.push_back(cplx_from(c));
  spec.peak_tuned = j.value("peak_tuned", false);
  spec.order = j.value("order", 1);
  if (j.contains("c_tilde")) {
    const json& ct = j.at("c_tilde");
    std::string kind = ct.value("kind", "zero");
    if (kind == "zero") spec.c_tilde = CTilde::zero();
    else if (kind == "series") {
      std::vector<cplx> s;
      for (const json& c : ct.value("series", json::array())) s.push_back(cplx_from(c));
      spec.c_tilde = CTilde::from_series(std::move(s));
    } else if (kind == "kappa_eta") {
      spec.c_tilde = CTilde::from_kappa(cplx_from(ct.at("kappa")));
    } else {
      throw NumericError("spec_from_json: unknown c_tilde.kind '" + kind + "'");
    }
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    spec.grid.n_min = g.value("n_min", -30);
    spec.grid.n_max = g.value("n_max", 30);
    spec.grid.t_min = g.value("t_min", -5.0);
    spec.grid.t_max = g.value("t_max", 5.0);
    spec.grid.t_steps = g.value("t_steps", 201);
  }
  spec.sheet = j.value("sheet", "principal") == "other" ? Sheet::other : Sheet::principal;
  std::string side = j.value("side", "none");
  spec.side = side == "above" ? CutSide::above
              : side == "below" ? CutSide::below : CutSide::none;
  return spec;
}

namespace {

SolutionSpec soliton_case(double b, double A, double B, cplx z1, CutSide side) {
  SolutionSpec s;
  s.family = SolutionSpec::Family::soliton1;
  s.params = Params{1.0, b, A, B, 0.0, 0.0};
  s.zs = {z1};
  s.peak_tuned = true;
  s.side = side;
  s.grid.t_min = -10.0;
  s.grid.t_max = 10.0;
  return s;
}

SolutionSpec nfold_case(double b, double A, double B, std::vector<cplx> zs, CutSide side) {
  SolutionSpec s;
  s.family = SolutionSpec::Family::nfold;
  s.params = Params{1.0, b, A, B, 0.0, 0.0};
  s.zs = std::move(zs);
  s.peak_tuned = true;
  s.side = side;
  s.grid.t_min = -10.0;
  s.grid.t_max = 10.0;
  return s;
}

SolutionSpec rogue_case(double b, double A, double B, int order, CTilde ct) {
  SolutionSpec s;
  s.family = SolutionSpec::Family::rogue;
  s.params = Params{1.0, b, A, B, 0.0, 0.0};
  s.order = order;
  s.c_tilde = std::move(ct);
  s.grid.t_min = -4.0;
  s.grid.t_max = 4.0;
  return s;
}

}  // namespace

std::vector<FigureCase> figure_cases(cplx kappa8, cplx kappa9) {
  const double A512 = 5.0 / 12.0, pi2 = 1.5707963267948966;
  std::vector<FigureCase> cases;
  SolutionSpec f2a = soliton_case(0.5, A512, 0.0, 1.2, CutSide::above);
  SolutionSpec f2b = soliton_case(0.5, A512, 0.0, 1.8, CutSide::none);
  SolutionSpec f3a = soliton_case(1.0, A512, pi2, 1.3, CutSide::above);
  SolutionSpec f3b = soliton_case(0.5, A512, pi2, 1.6, CutSide::none);
  SolutionSpec f4a = nfold_case(0.5, A512, 0.0, {1.3, 1.8}, CutSide::above);
  SolutionSpec f4b = nfold_case(0.5, A512, 0.0, {cplx(1.0, 0.9), cplx(1.0, -0.9)},
                                CutSide::none);
  SolutionSpec f5a = nfold_case(0.5, A512, pi2, {1.75, cplx(1.75, -1.0)}, CutSide::none);
  SolutionSpec f5b = nfold_case(0.5, A512, pi2, {1.75, 2.25}, CutSide::none);
  SolutionSpec f6 = nfold_case(0.5, A512, pi2, {1.25, 2.25}, CutSide::above);
  SolutionSpec f7a = rogue_case(1.0, 11.0 / 60.0, pi2, 1, CTilde::zero());
  SolutionSpec f7b = rogue_case(1.0, 11.0 / 60.0, 0.0, 1, CTilde::zero());
  SolutionSpec f8 = rogue_case(0.3, 23.0 / 60.0, 0.0, 3, CTilde::zero());
  SolutionSpec f8c = rogue_case(0.3, 23.0 / 60.0, 0.0, 3, CTilde::from_kappa(kappa8));
  SolutionSpec f9 = rogue_case(0.3, 18.0 / 55.0, 0.0, 4, CTilde::zero());
  SolutionSpec f9c = rogue_case(0.3, 18.0 / 55.0, 0.0, 4, CTilde::from_kappa(kappa9));

  cases.push_back({"fig2a", f2a, 0.85, 0.01});
  cases.push_back({"fig2b", f2b, 2.33, 0.01});
  cases.push_back({"fig2c", f2a, 0.85, 0.01});
  cases.push_back({"fig2d", f2b, 2.33, 0.01});
  cases.push_back({"fig3a", f3a, 1.07, 0.01});
  cases.push_back({"fig3b", f3b, 1.79, 0.01});
  cases.push_back({"fig3c", f3a, 1.07, 0.01});
  cases.push_back({"fig3d", f3b, 1.79, 0.01});
  cases.push_back({"fig4a", f4a, 4.05, 0.01});
  cases.push_back({"fig4b", f4b, 2.36, 0.01});
  cases.push_back({"fig4c", f4a, 4.05, 0.01});
  cases.push_back({"fig4d", f4b, 2.36, 0.01});
  cases.push_back({"fig5a", f5a, 9.3, 0.1});
  cases.push_back({"fig5b", f5b, 11.6, 0.1});
  cases.push_back({"fig5c", f5a, 9.3, 0.1});
  cases.push_back({"fig5d", f5b, 11.6, 0.1});
  cases.push_back({"fig6", f6, 5.89, 0.01});
  cases.push_back({"fig7a", f7a, 0.57, 0.01});
  cases.push_back({"fig7b", f7b, 0.57, 0.01});
  cases.push_back({"fig7c", f7a, 0.57, 0.01});
  cases.push_back({"fig7d", f7b, 0.57, 0.01});
  cases.push_back({"fig8a", f8, 6.84, 0.01});
  cases.push_back({"fig8b", f8, 6.84, 0.01});
  cases.push_back({"fig8c", f8c, 0.0, 0.0});
  cases.push_back({"fig9a", f9, 9.02, 0.01});
  cases.push_back({"fig9b", f9, 9.02, 0.01});
  cases.push_back({"fig9c", f9c, 0.0, 0.0});
  return cases;
}

std::optional<FigureCase> figure_case(const std::string& id, cplx kappa8, cplx kappa9) {
  for (FigureCase& c : figure_cases(kappa8, kappa9))
    if (c.id == id) return c;
  return std::nullopt;
}

}  // namespace hirota
