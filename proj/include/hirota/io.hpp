#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hirota/darboux.hpp"
#include "hirota/dynamics.hpp"
#include "hirota/seed.hpp"

namespace hirota {

struct GridSpec {
  int n_min = -30, n_max = 30;
  double t_min = -5.0, t_max = 5.0;
  int t_steps = 201;
};

// Declarative description of one constructed solution.
struct SolutionSpec {
  enum class Family { background, soliton1, nfold, rogue };
  Family family = Family::background;
  Params params;
  std::vector<cplx> zs, cs;  // spectral points / translation constants
  bool peak_tuned = false;
  int order = 1;    // rogue order
  CTilde c_tilde;   // rogue chi-offset
  GridSpec grid;
  Sheet sheet = Sheet::principal;
  CutSide side = CutSide::none;
};

// Field-path message for an invalid spec, empty when valid.
std::string validate_spec(const SolutionSpec& spec);

// Single field value; constants resolved (peak tuning applied) beforehand via
// resolve_constants when the family needs them.
cplx evaluate_at(const SolutionSpec& spec, int n, double t);

// Fill in missing translation constants (peak-tuned or zero).
SolutionSpec resolve_constants(const SolutionSpec& spec);

// Threaded evaluation over the spec's grid window. Honors HIROTA_THREADS.
LatticeGrid evaluate_grid(const SolutionSpec& spec);

struct GridStats {
  double max_abs = 0.0;
  int max_n = 0;
  double max_t = 0.0;
};
GridStats grid_stats(const LatticeGrid& grid);

// CSV format: header "n,t,re_v,im_v,abs_v", 17 significant digits, LF endings.
void write_grid_csv(const std::string& path, const LatticeGrid& grid);
LatticeGrid read_grid_csv(const std::string& path);

// |v| heatmap with embedded 256-entry palette, axes labeled n and t.
void write_heatmap_svg(const std::string& path, const LatticeGrid& grid);

// JSON round-trip of the spec (lossless; complex as [re, im] pairs).
std::string spec_to_json(const SolutionSpec& spec);
SolutionSpec spec_from_json(const std::string& text);

// One figure reproduction target.
struct FigureCase {
  std::string id;
  SolutionSpec spec;
  double caption_value = 0.0;  // 0 = no published comparison
  double tolerance = 0.0;
};
// All known figure ids in order; kappa feeds the offset variants (fig8c/fig9c).
std::vector<FigureCase> figure_cases(cplx kappa8 = cplx(0.0, 4.0),
                                     cplx kappa9 = cplx(0.0, 0.1));
std::optional<FigureCase> figure_case(const std::string& id, cplx kappa8 = cplx(0.0, 4.0),
                                      cplx kappa9 = cplx(0.0, 0.1));

}  // namespace hirota
