// Command-line driver: sweeps, time integration, verification and presets.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmqfrac/dynamics.hpp"
#include "gmqfrac/errors.hpp"
#include "gmqfrac/harness.hpp"
#include "gmqfrac/presets.hpp"
#include "gmqfrac/rbfcore.hpp"
#include "gmqfrac/verify.hpp"

namespace {

using namespace gmqfrac;

struct Flags {
  int dim = 1;
  std::string alpha;
  double eps = 0.0;
  double eps_factor = 0.0;
  std::string case_id = "case2";
  double p = 1.0;
  double scale = 1.0;
  std::string L;
  std::string J;
  std::string n;
  std::string grid_h;
  double square_w = 0.0;
  int K = 10;
  int M = 64;
  double dt = 0.0;
  double t_end = 0.0;
  double chi = 1.0;
  double kappa = 1e-3;
  std::string out = ".";
  std::uint64_t seed = 1;
  bool timing = false;
  std::string test_grid;
  bool no_advection = false;
  std::string preset;
  std::string config;

  CLI::Option* eps_opt = nullptr;
  CLI::Option* eps_factor_opt = nullptr;
  CLI::Option* K_opt = nullptr;
  CLI::Option* M_opt = nullptr;
  CLI::Option* dt_opt = nullptr;
  CLI::Option* t_end_opt = nullptr;
  CLI::Option* kappa_opt = nullptr;
};

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) {
      continue;
    }
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) {
      throw ConfigError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

double parse_step(const std::string& item) {
  const auto slash = item.find('/');
  if (slash == std::string::npos) {
    return std::stod(item);
  }
  return std::stod(item.substr(0, slash)) / std::stod(item.substr(slash + 1));
}

std::vector<double> parse_steps(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(parse_step(item));
    }
  }
  return out;
}

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--alpha", f.alpha, "fractional order(s), comma separated");
  f.eps_opt = app->add_option("--eps", f.eps, "absolute shape parameter");
  f.eps_factor_opt = app->add_option("--eps-factor", f.eps_factor, "shape parameter as a multiple of h");
  f.K_opt = app->add_option("--quad-K", f.K, "Gauss points of the tail quadrature")->check(CLI::Range(1, 512));
  f.M_opt = app->add_option("--quad-M", f.M, "angles of the tail quadrature (2D)")->check(CLI::PositiveNumber);
  app->add_option("--out", f.out, "output directory");
  app->add_flag("--timing", f.timing, "record wall-clock seconds (makes output non-reproducible)");
  app->add_option("--config", f.config, "flat key=value file; flags take precedence");
}

void add_layout(CLI::App* app, Flags& f) {
  app->add_option("--dim", f.dim, "spatial dimension")->check(CLI::IsMember({1, 2}));
  app->add_option("--case", f.case_id, "exact solution")->check(CLI::IsMember({"case1", "case2"}));
  app->add_option("--p", f.p, "case 2 exponent");
  app->add_option("--scale", f.scale, "case 2 support scaling");
  app->add_option("--n", f.n, "1D interval counts, comma separated");
  app->add_option("--L", f.L, "polar radii counts, comma separated");
  app->add_option("--J", f.J, "polar angle counts, comma separated");
  app->add_option("--grid-h", f.grid_h, "grid steps (e.g. 1/8,1/16)");
  app->add_option("--square-w", f.square_w, "embedded square half-width (with --grid-h)");
  app->add_option("--test-grid", f.test_grid, "nodes or uniform")->check(CLI::IsMember({"nodes", "uniform"}));
}

void add_time(CLI::App* app, Flags& f) {
  f.dt_opt = app->add_option("--dt", f.dt, "time step")->check(CLI::PositiveNumber);
  f.t_end_opt = app->add_option("--t-end", f.t_end, "final time")->check(CLI::NonNegativeNumber);
  f.kappa_opt = app->add_option("--kappa", f.kappa, "dissipation coefficient")->check(CLI::NonNegativeNumber);
}

std::vector<Layout> layouts_from(const Flags& f) {
  std::vector<Layout> out;
  if (f.dim == 1) {
    for (int n : parse_list<int>(f.n.empty() ? "2,4,8,16" : f.n, "--n")) {
      out.push_back(Layout::interval(n));
    }
  } else if (!f.grid_h.empty()) {
    for (double h : parse_steps(f.grid_h)) {
      out.push_back(f.square_w > 0.0 ? Layout::clipped(h, f.square_w) : Layout::disk(h));
    }
  } else {
    const auto Ls = parse_list<int>(f.L.empty() ? "3,5,7,9,11" : f.L, "--L");
    const auto Js = f.J.empty() ? Ls : parse_list<int>(f.J, "--J");
    if (Js.size() != Ls.size()) {
      throw ConfigError("--L and --J need the same number of entries");
    }
    for (std::size_t i = 0; i < Ls.size(); ++i) {
      out.push_back(Layout::polar(Ls[i], Js[i]));
    }
  }
  return out;
}

SweepConfig sweep_from(const Flags& f) {
  SweepConfig cfg;
  const auto alphas = parse_list<double>(f.alpha.empty() ? "0.4" : f.alpha, "--alpha");
  cfg.alpha = alphas.front();
  cfg.exact.kind = f.case_id == "case1" ? ExactSolution::Kind::Case1 : ExactSolution::Kind::Case2;
  cfg.exact.p = f.p;
  cfg.exact.scale = f.scale;
  if (f.eps_factor_opt->count() > 0) {
    cfg.eps = {true, f.eps_factor};
  } else {
    cfg.eps = {false, f.eps_opt->count() > 0 ? f.eps : 1.5};
  }
  cfg.layouts = layouts_from(f);
  cfg.K = f.K;
  cfg.M = f.M;
  cfg.timing = f.timing;
  const bool nodes = f.test_grid.empty() ? f.dim == 1 : f.test_grid == "nodes";
  cfg.test_grid = nodes ? TestGrid::Nodes : TestGrid::Uniform;
  return cfg;
}

int emit(const RunReport& rep, const Flags& f, const std::string& stem) {
  auto files = write_report(rep, f.out, stem);
  files.push_back(write_plot_script(f.out, stem, files));
  rep.write_csv(std::cout);
  return 0;
}

std::vector<Point> centers_of(const PointSet& ps) { return {ps.points().begin(), ps.points().end()}; }

int cmd_evolve(const Flags& f) {
  const int L = f.L.empty() ? 8 : parse_list<int>(f.L, "--L").front();
  const int J = f.J.empty() ? L : parse_list<int>(f.J, "--J").front();
  const PointSet ps = polar_layout(L, J);
  const double alpha = f.alpha.empty() ? 1.0 : parse_list<double>(f.alpha, "--alpha").front();
  const GmqBasis basis(centers_of(ps), FracParams(2, alpha), f.eps_opt->count() ? f.eps : 1.0);
  EvolutionConfig cfg;
  cfg.dt = f.dt_opt->count() ? f.dt : 1e-3;
  cfg.t_end = f.t_end_opt->count() ? f.t_end : 0.5;
  cfg.chi = f.chi;
  const Trajectory tr = crank_nicolson_mixed(
      ps, basis, cfg, [](const Point& x) { return std::exp(-16 * x[0] * x[0] - 4 * x[1] * x[1]); },
      f.K, f.M);
  std::cout << "t,max,l2\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    std::cout << format_number(tr.times[k]) << ',' << format_number(tr.states[k].maxCoeff()) << ','
              << format_number(tr.states[k].norm()) << '\n';
  }
  return 0;
}

int cmd_qg(const Flags& f) {
  const double h = f.grid_h.empty() ? 1.0 / 16.0 : parse_steps(f.grid_h).front();
  const PointSet ps = disk_grid(h);
  const double alpha = f.alpha.empty() ? 1.0 : parse_list<double>(f.alpha, "--alpha").front();
  const QgOperators ops = build_qg_operators(ps, f.eps_opt->count() ? f.eps : 0.1, alpha, f.K, f.M);
  EvolutionConfig cfg;
  cfg.dt = f.dt_opt->count() ? f.dt : 0.01;
  cfg.t_end = f.t_end_opt->count() ? f.t_end : 4.0;
  cfg.kappa = f.kappa;
  for (double t = 1.0; t < cfg.t_end; t += 1.0) {
    cfg.snapshot_times.push_back(t);
  }
  const QgRun run = run_qg(
      ps, ops, cfg, [](const Point& x) { return std::exp(-4 * x[0] * x[0] - 64 * x[1] * x[1]); },
      !f.no_advection);
  std::cout << "t,max_abs,anisotropy\n";
  for (std::size_t k = 0; k < run.traj.times.size(); ++k) {
    std::cout << format_number(run.traj.times[k]) << ',' << format_number(run.max_abs[k]) << ','
              << format_number(run.anisotropy[k]) << '\n';
  }
  return 0;
}

int cmd_verify(const Flags& f) {
  bool ok = true;
  for (const auto& r : run_verification(f.seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << format_number(r.measured)
              << " (tol " << format_number(r.tolerance) << ") " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 2;
}

int cmd_preset(const Flags& f) {
  PresetOptions o;
  if (!f.alpha.empty()) {
    o.alphas = parse_list<double>(f.alpha, "--alpha");
  }
  if (f.eps_opt->count()) o.eps = f.eps;
  if (f.eps_factor_opt->count()) o.eps_factor = f.eps_factor;
  if (f.K_opt->count()) o.K = f.K;
  if (f.M_opt->count()) o.M = f.M;
  if (f.dt_opt->count()) o.dt = f.dt;
  if (f.t_end_opt->count()) o.t_end = f.t_end;
  if (f.kappa_opt->count()) o.kappa = f.kappa;
  if (!f.test_grid.empty()) {
    o.test_grid = f.test_grid == "nodes" ? TestGrid::Nodes : TestGrid::Uniform;
  }
  o.out_dir = f.out;
  o.timing = f.timing;
  run_preset(f.preset, o, std::cout);
  return 0;
}

// Splices `--key=value` pairs from a --config file right after the
// subcommand, so that flags given on the command line (parsed later) win.
std::vector<std::string> with_config(const std::vector<std::string>& args,
                                     const std::vector<std::string>& subcommands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) {
    return args;
  }
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path);
  }
  std::vector<std::string> extra;
  for (const auto& [k, v] : parse_config(in)) {
    if (k == "config") {
      continue;
    }
    extra.push_back("--" + k + "=" + v);
  }
  std::vector<std::string> out;
  bool spliced = false;
  for (const auto& a : args) {
    out.push_back(a);
    if (!spliced && std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end()) {
      out.insert(out.end(), extra.begin(), extra.end());
      spliced = true;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional Laplacian solver with generalized multiquadric RBF collocation"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Flags f;

  auto* forward = app.add_subcommand("forward", "interpolate u and sweep the error of (-Delta)^{alpha/2} u");
  add_common(forward, f);
  add_layout(forward, f);
  auto* solve = app.add_subcommand("solve", "solve the fractional Poisson problem over a sweep");
  add_common(solve, f);
  add_layout(solve, f);
  auto* evolve = app.add_subcommand("evolve", "mixed classical/fractional diffusion (Crank-Nicolson)");
  add_common(evolve, f);
  add_time(evolve, f);
  evolve->add_option("--chi", f.chi, "weight of the fractional term")->check(CLI::Range(0.0, 1.0));
  evolve->add_option("--L", f.L, "polar radii count");
  evolve->add_option("--J", f.J, "polar angle count");
  auto* qg = app.add_subcommand("qg", "quasi-geostrophic single vortex (SSP-RK3)");
  add_common(qg, f);
  add_time(qg, f);
  qg->add_option("--grid-h", f.grid_h, "grid step inside the disk");
  qg->add_flag("--no-advection", f.no_advection, "drop the transport term");
  auto* verify = app.add_subcommand("verify", "oracle and property checks");
  verify->add_option("--seed", f.seed, "seed for sampled configurations");
  verify->add_option("--config", f.config, "flat key=value file");
  auto* preset = app.add_subcommand("preset", "reproduce a table or figure setup");
  preset->add_option("name", f.preset, "preset name")->required()->check(CLI::IsMember(preset_names()));
  add_common(preset, f);
  add_time(preset, f);
  preset->add_option("--test-grid", f.test_grid, "nodes or uniform")->check(CLI::IsMember({"nodes", "uniform"}));

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = with_config(args, {"forward", "solve", "evolve", "qg", "verify", "preset"});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*forward) {
      return emit(run_forward_sweep(sweep_from(f)), f, "forward");
    }
    if (*solve) {
      return emit(run_solve_sweep(sweep_from(f)), f, "solve");
    }
    if (*evolve) {
      return cmd_evolve(f);
    }
    if (*qg) {
      return cmd_qg(f);
    }
    if (*verify) {
      return cmd_verify(f);
    }
    if (*preset) {
      return cmd_preset(f);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
