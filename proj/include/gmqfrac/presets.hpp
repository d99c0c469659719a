#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gmqfrac/exterior.hpp"
#include "gmqfrac/geometry.hpp"
#include "gmqfrac/harness.hpp"

namespace gmqfrac {

/// Manufactured solution used by a sweep.
struct ExactSolution {
  enum class Kind { Case1, Case2 };
  Kind kind = Kind::Case2;
  double p = 1.0;          // Case 2 exponent
  double scale = 1.0;      // Case 2 support scaling l
  double amplitude = 1.0;  // multiplies both u and f

  double u(int d, const Point& x) const;
  double f(int d, double alpha, const Point& x) const;
  /// Whether the closed-form right-hand side is available at x.
  bool f_defined(const Point& x) const;
  /// Exterior data: u itself for Case 1, zero for Case 2.
  RadialProfile exterior(int d) const;
  std::string describe() const;
};

/// Absolute eps, or eps = factor * spacing of the layout.
struct EpsRule {
  bool relative = false;
  double value = 1.5;
  double eps(double spacing) const { return relative ? value * spacing : value; }
  std::string describe() const;
};

struct Layout {
  enum class Kind { Interval, Polar, DiskGrid, Clipped };
  Kind kind = Kind::Interval;
  int a = 0;  // intervals (1D) or L
  int b = 0;  // J
  double h = 0.0;
  double w = 0.0;  // square half-width for Clipped

  static Layout interval(int intervals) { return {Kind::Interval, intervals, 0, 0.0, 0.0}; }
  static Layout polar(int L, int J) { return {Kind::Polar, L, J, 0.0, 0.0}; }
  static Layout disk(double h) { return {Kind::DiskGrid, 0, 0, h, 0.0}; }
  static Layout clipped(double h, double w) { return {Kind::Clipped, 0, 0, h, w}; }

  int dim() const { return kind == Kind::Interval ? 1 : 2; }
  PointSet build() const;
  Domain domain() const;
  /// Grid spacing used by relative eps: 2/N, 1/L or h.
  double spacing() const;
  /// Table label: intervals in 1D, point count in 2D.
  long label() const;
};

enum class TestGrid { Nodes, Uniform };

struct SweepConfig {
  double alpha = 0.4;
  ExactSolution exact;
  std::vector<Layout> layouts;
  EpsRule eps;
  int K = 10;
  int M = 64;
  TestGrid test_grid = TestGrid::Nodes;
  bool timing = false;
  bool report_cond = true;
};

/// Interpolate u and compare the discrete fractional Laplacian with f (Ehat).
RunReport run_forward_sweep(const SweepConfig& cfg);
/// Solve the Poisson problem and compare with u (E), with cond(A_phi).
RunReport run_solve_sweep(const SweepConfig& cfg);

struct PresetOptions {
  std::optional<std::vector<double>> alphas;
  std::optional<double> eps;
  std::optional<double> eps_factor;
  std::optional<int> K;
  std::optional<int> M;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<double> kappa;
  std::optional<TestGrid> test_grid;
  std::string out_dir = ".";
  bool timing = false;
};

struct PresetOutput {
  std::vector<std::string> files;
  std::vector<std::pair<std::string, RunReport>> reports;
};

const std::vector<std::string>& preset_names();

/// Runs a named preset, writing CSV/meta/snapshot files and a plot script
/// into opts.out_dir. Progress lines go to `log`.
PresetOutput run_preset(const std::string& name, const PresetOptions& opts, std::ostream& log);

/// Writes `report` as <dir>/<stem>.csv and <dir>/<stem>.meta.
std::vector<std::string> write_report(const RunReport& report, const std::string& dir,
                                      const std::string& stem);

/// Emits <dir>/plot_<stem>.py, a matplotlib script that plots the given
/// report CSVs (error vs N) and field/snapshot CSVs (scatter of value).
std::string write_plot_script(const std::string& dir, const std::string& stem,
                              const std::vector<std::string>& files);

}  // namespace gmqfrac
