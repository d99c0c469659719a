#include "gmqfrac/presets.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gmqfrac/dynamics.hpp"
#include "gmqfrac/errors.hpp"
#include "gmqfrac/linsys.hpp"
#include "gmqfrac/oracles.hpp"
#include "gmqfrac/rbfcore.hpp"
#include "gmqfrac/specfun.hpp"
#include "gmqfrac/steady.hpp"

namespace gmqfrac {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::vector<Point> centers_of(const PointSet& ps) { return {ps.points().begin(), ps.points().end()}; }

std::vector<Point> test_points_for(const SweepConfig& cfg, const PointSet& ps, const Layout& lay) {
  std::vector<Point> raw;
  if (cfg.test_grid == TestGrid::Nodes) {
    raw = interior_test_points(ps);
  } else if (lay.dim() == 1) {
    raw = uniform_test_grid_1d();
  } else {
    raw = polar_test_grid();
  }
  const Domain dom = lay.domain();
  std::vector<Point> out;
  for (const auto& x : raw) {
    if (dom.contains_open(x) && cfg.exact.f_defined(x)) {
      out.push_back(x);
    }
  }
  if (out.empty()) {
    throw ConfigError("no admissible test points for this layout");
  }
  return out;
}

void fill_meta(RunReport& rep, const SweepConfig& cfg, const std::string& kind, bool timing) {
  rep.set_meta("sweep", kind);
  rep.set_meta("d", std::to_string(cfg.layouts.empty() ? 0 : cfg.layouts.front().dim()));
  rep.set_meta("alpha", num(cfg.alpha));
  rep.set_meta("eps", cfg.eps.describe());
  rep.set_meta("case", cfg.exact.describe());
  rep.set_meta("K", std::to_string(cfg.K));
  rep.set_meta("M", std::to_string(cfg.M));
  rep.set_meta("test_points", cfg.test_grid == TestGrid::Nodes ? "interior nodes" : "uniform grid");
  rep.set_meta("git_revision", git_revision());
  if (timing) {
    const std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    rep.set_meta("timestamp", buf);
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
  }
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string alpha_tag(double a) {
  std::ostringstream os;
  os << "alpha_" << a;
  return os.str();
}

std::vector<double> alphas_or(const PresetOptions& o, std::vector<double> def) {
  return o.alphas ? *o.alphas : def;
}

void write_field(const std::string& path, const PointSet& ps, const Eigen::VectorXd& interior) {
  std::ofstream out(path);
  out.precision(12);
  out << "x1,x2,value\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double v = ps.is_interior(i) ? interior[static_cast<Eigen::Index>(i)] : 0.0;
    out << ps[i][0] << ',' << ps[i][1] << ',' << v << '\n';
  }
}

}  // namespace

double ExactSolution::u(int d, const Point& x) const {
  if (kind == Kind::Case1) {
    return amplitude * case1_u(d, x);
  }
  return amplitude * case2_scaled_u(p, scale, x);
}

double ExactSolution::f(int d, double alpha, const Point& x) const {
  if (kind == Kind::Case1) {
    return amplitude * case1_f(d, alpha, x);
  }
  return amplitude * case2_scaled_f(d, alpha, p, scale, x);
}

bool ExactSolution::f_defined(const Point& x) const {
  const double r2 = kind == Kind::Case1 ? x.squaredNorm() : (scale * x).squaredNorm();
  return r2 < 1.0;
}

RadialProfile ExactSolution::exterior(int d) const {
  if (kind == Kind::Case1) {
    return {Point::Zero(), 1.0, -0.5 * (d + 1), amplitude};
  }
  return RadialProfile::zero();
}

std::string ExactSolution::describe() const {
  if (kind == Kind::Case1) {
    return "case1";
  }
  std::ostringstream os;
  os << "case2 p=" << p << " scale=" << scale;
  if (amplitude != 1.0) {
    os << " amplitude=" << amplitude;
  }
  return os.str();
}

std::string EpsRule::describe() const {
  return relative ? num(value) + "*h" : num(value);
}

PointSet Layout::build() const {
  switch (kind) {
    case Kind::Interval:
      return uniform_interval(a + 1);
    case Kind::Polar:
      return polar_layout(a, b);
    case Kind::DiskGrid:
      return disk_grid(h);
    case Kind::Clipped:
      return clipped_grid(h, Domain::embedded_square(w));
  }
  throw ConfigError("unknown layout");
}

Domain Layout::domain() const {
  switch (kind) {
    case Kind::Interval:
      return Domain::interval();
    case Kind::Clipped:
      return Domain::embedded_square(w);
    default:
      return Domain::unit_disk();
  }
}

double Layout::spacing() const {
  switch (kind) {
    case Kind::Interval:
      return 2.0 / a;
    case Kind::Polar:
      return 1.0 / a;
    default:
      return h;
  }
}

long Layout::label() const {
  if (kind == Kind::Interval) {
    return a;
  }
  if (kind == Kind::Polar) {
    return static_cast<long>(a) * (b + 1) + 1;
  }
  return static_cast<long>(build().size());
}

RunReport run_forward_sweep(const SweepConfig& cfg) {
  RunReport rep;
  fill_meta(rep, cfg, "forward", cfg.timing);
  for (const auto& lay : cfg.layouts) {
    const PointSet ps = lay.build();
    const int d = ps.dim();
    const GmqBasis basis(centers_of(ps), FracParams(d, cfg.alpha), cfg.eps.eps(lay.spacing()));
    Eigen::VectorXd samples(static_cast<Eigen::Index>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      samples[static_cast<Eigen::Index>(i)] = cfg.exact.u(d, ps[i]);
    }
    const auto tp = test_points_for(cfg, ps, lay);

    const auto t0 = Clock::now();
    const Eigen::MatrixXd A = phi_matrix(basis, ps.points());
    const Interpolant interp = interpolate(A, samples);
    const Eigen::VectorXd approx =
        forward_frac_lap(interp.lambda, basis, tp, ForwardMode::ZeroExtended, cfg.K, cfg.M);
    const double secs = seconds_since(t0);

    Eigen::VectorXd exact(static_cast<Eigen::Index>(tp.size()));
    for (std::size_t i = 0; i < tp.size(); ++i) {
      exact[static_cast<Eigen::Index>(i)] = cfg.exact.f(d, cfg.alpha, tp[i]);
    }
    ReportRow row;
    row.N = lay.label();
    row.Ehat = rms_error(exact, approx);
    if (cfg.report_cond) {
      row.cond = condition_estimate(A);
    }
    if (cfg.timing) {
      row.seconds = secs;
    }
    if (interp.suspicious()) {
      rep.set_meta("interpolation_residual_N" + std::to_string(row.N), format_number(interp.residual));
    }
    rep.rows.push_back(row);
  }
  rep.rate_scale = !cfg.layouts.empty() && cfg.layouts.front().dim() == 2 ? RunReport::RateScale::SqrtN
                                                                          : RunReport::RateScale::N;
  rep.compute_rates();
  return rep;
}

RunReport run_solve_sweep(const SweepConfig& cfg) {
  RunReport rep;
  fill_meta(rep, cfg, "solve", cfg.timing);
  for (const auto& lay : cfg.layouts) {
    const PointSet ps = lay.build();
    const int d = ps.dim();
    const GmqBasis basis(centers_of(ps), FracParams(d, cfg.alpha), cfg.eps.eps(lay.spacing()));
    Eigen::VectorXd f(static_cast<Eigen::Index>(ps.n_interior()));
    for (std::size_t i = 0; i < ps.n_interior(); ++i) {
      if (!cfg.exact.f_defined(ps[i])) {
        throw DomainError("right-hand side undefined at an equation point");
      }
      f[static_cast<Eigen::Index>(i)] = cfg.exact.f(d, cfg.alpha, ps[i]);
    }

    const auto t0 = Clock::now();
    const SystemMatrices sm = assemble(ps, basis, cfg.K, cfg.M);
    const PoissonSolution sol = solve_poisson(sm, ps, f, cfg.exact.exterior(d), cfg.K, cfg.M);
    const double secs = seconds_since(t0);

    Eigen::VectorXd approx;
    std::vector<Point> tp;
    if (cfg.test_grid == TestGrid::Nodes) {
      tp = interior_test_points(ps);
      approx = sol.U;
    } else {
      tp = test_points_for(cfg, ps, lay);
      approx = evaluate_interpolant(sol.lambda, basis, tp);
    }
    Eigen::VectorXd exact(static_cast<Eigen::Index>(tp.size()));
    for (std::size_t i = 0; i < tp.size(); ++i) {
      exact[static_cast<Eigen::Index>(i)] = cfg.exact.u(d, tp[i]);
    }
    ReportRow row;
    row.N = lay.label();
    row.E = rms_error(exact, approx);
    if (cfg.report_cond) {
      row.cond = condition_estimate(sm);
    }
    if (cfg.timing) {
      row.seconds = secs;
    }
    rep.rows.push_back(row);
  }
  rep.rate_scale = !cfg.layouts.empty() && cfg.layouts.front().dim() == 2 ? RunReport::RateScale::SqrtN
                                                                          : RunReport::RateScale::N;
  rep.compute_rates();
  return rep;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"table2", "table3",   "table4",     "table5",
                                              "table6", "fig-disk", "fig-square", "fig-mixed",
                                              "fig-qg"};
  return names;
}

std::vector<std::string> write_report(const RunReport& report, const std::string& dir,
                                      const std::string& stem) {
  ensure_dir(dir);
  const std::string csv = join(dir, stem + ".csv");
  const std::string meta = join(dir, stem + ".meta");
  {
    std::ofstream out(csv);
    report.write_csv(out);
  }
  {
    std::ofstream out(meta);
    report.write_meta(out);
  }
  return {csv, meta};
}

std::string write_plot_script(const std::string& dir, const std::string& stem,
                              const std::vector<std::string>& files) {
  ensure_dir(dir);
  const std::string path = join(dir, "plot_" + stem + ".py");
  std::ofstream out(path);
  out << "#!/usr/bin/env python3\n"
         "# Plots the data files written next to this script.\n"
         "import csv, os, sys\n"
         "import matplotlib\n"
         "matplotlib.use('Agg')\n"
         "import matplotlib.pyplot as plt\n\n"
         "HERE = os.path.dirname(os.path.abspath(__file__))\n"
         "FILES = [\n";
  for (const auto& f : files) {
    if (fs::path(f).extension() == ".csv") {
      out << "    '" << fs::path(f).filename().string() << "',\n";
    }
  }
  out << "]\n\n"
         "def num(s):\n"
         "    try:\n"
         "        return float(s)\n"
         "    except ValueError:\n"
         "        return float('nan')\n\n"
         "for name in FILES:\n"
         "    with open(os.path.join(HERE, name)) as fh:\n"
         "        rows = list(csv.DictReader(fh))\n"
         "    if not rows:\n"
         "        continue\n"
         "    keys = rows[0].keys()\n"
         "    fig, ax = plt.subplots()\n"
         "    if 'N' in keys:\n"
         "        n = [num(r['N']) for r in rows]\n"
         "        for col in ('E', 'Ehat'):\n"
         "            y = [num(r[col]) for r in rows]\n"
         "            if any(v == v for v in y):\n"
         "                ax.loglog(n, y, 'o-', label=col)\n"
         "        ax.set_xlabel('N')\n"
         "        ax.legend()\n"
         "    elif 'x1' in keys:\n"
         "        col = 'error' if 'error' in keys else 'value'\n"
         "        sc = ax.scatter([num(r['x1']) for r in rows], [num(r['x2']) for r in rows],\n"
         "                        c=[num(r[col]) for r in rows], s=8, cmap='viridis')\n"
         "        fig.colorbar(sc, ax=ax, label=col)\n"
         "        ax.set_aspect('equal')\n"
         "    elif 't' in keys:\n"
         "        t = [num(r['t']) for r in rows]\n"
         "        for col in keys:\n"
         "            if col not in ('t', 'chi'):\n"
         "                ax.plot(t, [num(r[col]) for r in rows], label=col)\n"
         "        ax.set_xlabel('t')\n"
         "        ax.legend()\n"
         "    ax.set_title(name)\n"
         "    fig.savefig(os.path.join(HERE, os.path.splitext(name)[0] + '.png'), dpi=120)\n"
         "    plt.close(fig)\n";
  return path;
}

namespace {

void add_report(PresetOutput& po, const RunReport& rep, const PresetOptions& opts,
                const std::string& stem, std::ostream& log) {
  const auto files = write_report(rep, opts.out_dir, stem);
  po.files.insert(po.files.end(), files.begin(), files.end());
  po.reports.emplace_back(stem, rep);
  log << stem << ":\n";
  rep.write_csv(log);
}

SweepConfig base_sweep(const PresetOptions& opts, double alpha, int K_default) {
  SweepConfig cfg;
  cfg.alpha = alpha;
  cfg.K = opts.K.value_or(K_default);
  cfg.M = opts.M.value_or(64);
  cfg.timing = opts.timing;
  return cfg;
}

EpsRule eps_or(const PresetOptions& opts, EpsRule def) {
  if (opts.eps) {
    return {false, *opts.eps};
  }
  if (opts.eps_factor) {
    return {true, *opts.eps_factor};
  }
  return def;
}

void preset_1d_smooth(PresetOutput& po, const std::string& name, double p,
                      const PresetOptions& opts, std::ostream& log) {
  for (double a : alphas_or(opts, {0.4, 0.8, 1.2, 1.6})) {
    SweepConfig cfg = base_sweep(opts, a, 64);
    cfg.exact.p = p;
    cfg.eps = eps_or(opts, {false, 1.5});
    cfg.test_grid = opts.test_grid.value_or(TestGrid::Nodes);
    for (int n : {2, 4, 8, 16}) {
      cfg.layouts.push_back(Layout::interval(n));
    }
    RunReport rep = run_forward_sweep(cfg);
    rep.set_meta("preset", name);
    add_report(po, rep, opts, name + "_" + alpha_tag(a), log);
  }
}

void preset_table4(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  for (double a : alphas_or(opts, {0.4, 0.8, 1.2, 1.6})) {
    SweepConfig cfg = base_sweep(opts, a, 64);
    cfg.exact.p = a;
    cfg.exact.scale = 2.0;
    cfg.eps = eps_or(opts, {true, 2.0});
    cfg.test_grid = opts.test_grid.value_or(TestGrid::Nodes);
    cfg.report_cond = false;
    for (int n : {256, 512, 1024, 2048}) {
      cfg.layouts.push_back(Layout::interval(n));
    }
    RunReport rep = run_forward_sweep(cfg);
    rep.set_meta("preset", "table4");
    add_report(po, rep, opts, "table4_" + alpha_tag(a), log);
  }
}

void preset_table5(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  std::vector<double> eps_list = opts.eps ? std::vector<double>{*opts.eps}
                                          : std::vector<double>{1.0, 1.5, 2.0};
  const double alpha = opts.alphas ? opts.alphas->front() : 1.0;
  for (double e : eps_list) {
    SweepConfig cfg = base_sweep(opts, alpha, 64);
    cfg.exact.kind = ExactSolution::Kind::Case1;
    cfg.eps = {false, e};
    cfg.test_grid = opts.test_grid.value_or(TestGrid::Uniform);
    for (int l : {3, 5, 7, 9, 11}) {
      cfg.layouts.push_back(Layout::polar(l, l));
    }
    RunReport rep = run_solve_sweep(cfg);
    rep.set_meta("preset", "table5");
    add_report(po, rep, opts, "table5_eps_" + num(e), log);
  }
}

void preset_table6(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  for (double a : alphas_or(opts, {0.4, 0.8, 1.2, 1.6})) {
    SweepConfig cfg = base_sweep(opts, a, 10);
    cfg.exact.p = 1.0 + 0.5 * a;
    cfg.eps = eps_or(opts, {true, 2.0});
    cfg.test_grid = opts.test_grid.value_or(TestGrid::Uniform);
    for (double h : {0.5, 0.25, 0.125, 0.0625, 0.03125}) {
      cfg.layouts.push_back(Layout::disk(h));
    }
    RunReport rep = run_solve_sweep(cfg);
    rep.set_meta("preset", "table6");
    add_report(po, rep, opts, "table6_" + alpha_tag(a), log);
  }
}

void preset_fig_disk(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  for (double a : alphas_or(opts, {0.4, 0.8, 1.2, 1.6})) {
    SweepConfig cfg = base_sweep(opts, a, 64);
    // f = 1: Case 2 at p = alpha/2 divided by its constant right-hand side.
    cfg.exact.p = 0.5 * a;
    cfg.exact.amplitude = 1.0 / case2_f(2, a, 0.5 * a, Point::Zero());
    cfg.eps = eps_or(opts, {false, 0.8});
    cfg.test_grid = TestGrid::Uniform;
    cfg.layouts.push_back(Layout::polar(10, 10));
    RunReport rep = run_solve_sweep(cfg);
    rep.set_meta("preset", "fig-disk");
    const std::string stem = "fig_disk_" + alpha_tag(a);
    add_report(po, rep, opts, stem, log);

    // Pointwise field on the polar test grid.
    const PointSet ps = cfg.layouts.front().build();
    const GmqBasis basis(centers_of(ps), FracParams(2, a), cfg.eps.eps(cfg.layouts.front().spacing()));
    const SystemMatrices sm = assemble(ps, basis, cfg.K, cfg.M);
    const Eigen::VectorXd f = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(ps.n_interior()));
    const PoissonSolution sol = solve_poisson(sm, ps, f);
    const auto tp = polar_test_grid();
    const Eigen::VectorXd v = evaluate_interpolant(sol.lambda, basis, tp);
    const std::string path = join(opts.out_dir, stem + "_field.csv");
    std::ofstream out(path);
    out.precision(12);
    out << "x1,x2,numerical,exact,error\n";
    for (std::size_t i = 0; i < tp.size(); ++i) {
      const double ex = cfg.exact.u(2, tp[i]);
      out << tp[i][0] << ',' << tp[i][1] << ',' << v[static_cast<Eigen::Index>(i)] << ',' << ex
          << ',' << std::abs(v[static_cast<Eigen::Index>(i)] - ex) << '\n';
    }
    po.files.push_back(path);
  }
}

void preset_fig_square(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  const Layout lay = Layout::clipped(1.0 / 32.0, std::sqrt(2.0) / 2.0);
  const PointSet ps = lay.build();
  const double eps = opts.eps.value_or(0.05);
  const int K = opts.K.value_or(10);
  const int M = opts.M.value_or(64);
  for (double a : alphas_or(opts, {0.4, 0.8, 1.2, 1.6})) {
    const GmqBasis basis(centers_of(ps), FracParams(2, a), eps);
    const auto t0 = Clock::now();
    const SystemMatrices sm = assemble(ps, basis, K, M);
    const Eigen::VectorXd f = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(ps.n_interior()));
    const PoissonSolution sol = solve_poisson(sm, ps, f, RadialProfile::zero(), K, M);
    const double secs = seconds_since(t0);
    RunReport rep;
    rep.set_meta("preset", "fig-square");
    rep.set_meta("alpha", num(a));
    rep.set_meta("eps", num(eps));
    rep.set_meta("K", std::to_string(K));
    rep.set_meta("M", std::to_string(M));
    rep.set_meta("git_revision", git_revision());
    ReportRow row;
    row.N = static_cast<long>(ps.size());
    row.cond = condition_estimate(sm);
    if (opts.timing) {
      row.seconds = secs;
    }
    rep.rows.push_back(row);
    const std::string stem = "fig_square_" + alpha_tag(a);
    add_report(po, rep, opts, stem, log);
    const std::string path = join(opts.out_dir, stem + "_field.csv");
    write_field(path, ps, sol.U);
    po.files.push_back(path);
  }
}

void write_snapshots(PresetOutput& po, const PresetOptions& opts, const std::string& stem,
                     const PointSet& ps, const Trajectory& tr) {
  const std::string manifest = join(opts.out_dir, stem + "_manifest.txt");
  std::ofstream man(manifest);
  man << "# time file\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    std::ostringstream name;
    name << stem << "_t" << k << ".csv";
    write_field(join(opts.out_dir, name.str()), ps, tr.states[k]);
    man << num(tr.times[k]) << ' ' << name.str() << '\n';
    po.files.push_back(join(opts.out_dir, name.str()));
  }
  po.files.push_back(manifest);
}

void preset_fig_mixed(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  const PointSet ps = polar_layout(8, 8);
  const double alpha = opts.alphas ? opts.alphas->front() : 1.0;
  const GmqBasis basis(centers_of(ps), FracParams(2, alpha), opts.eps.value_or(1.0));
  const std::string diag_path = join(opts.out_dir, "fig_mixed_peaks.csv");
  std::ofstream diag(diag_path);
  diag << "chi,t,max,l2\n";
  for (double chi : {0.0, 0.5, 1.0}) {
    EvolutionConfig cfg;
    cfg.dt = opts.dt.value_or(1e-3);
    cfg.t_end = opts.t_end.value_or(0.5);
    cfg.chi = chi;
    cfg.snapshot_times = {0.05, 0.1, 0.25};
    const Trajectory tr = crank_nicolson_mixed(
        ps, basis, cfg, [](const Point& x) { return std::exp(-16 * x[0] * x[0] - 4 * x[1] * x[1]); },
        opts.K.value_or(10), opts.M.value_or(64));
    std::ostringstream stem;
    stem << "fig_mixed_chi_" << chi;
    write_snapshots(po, opts, stem.str(), ps, tr);
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      diag << chi << ',' << num(tr.times[k]) << ',' << format_number(tr.states[k].maxCoeff()) << ','
           << format_number(tr.states[k].norm()) << '\n';
    }
    log << "chi=" << chi << " peak(t_end)=" << format_number(tr.states.back().maxCoeff()) << '\n';
  }
  po.files.push_back(diag_path);
}

void preset_fig_qg(PresetOutput& po, const PresetOptions& opts, std::ostream& log) {
  const PointSet ps = disk_grid(1.0 / 16.0);
  const double alpha = opts.alphas ? opts.alphas->front() : 1.0;
  const QgOperators ops = build_qg_operators(ps, opts.eps.value_or(0.1), alpha,
                                             opts.K.value_or(10), opts.M.value_or(64));
  EvolutionConfig cfg;
  cfg.dt = opts.dt.value_or(0.01);
  cfg.t_end = opts.t_end.value_or(4.0);
  cfg.kappa = opts.kappa.value_or(1e-3);
  for (double t = 1.0; t < cfg.t_end; t += 1.0) {
    cfg.snapshot_times.push_back(t);
  }
  const QgRun run = run_qg(
      ps, ops, cfg, [](const Point& x) { return std::exp(-4 * x[0] * x[0] - 64 * x[1] * x[1]); });
  write_snapshots(po, opts, "fig_qg", ps, run.traj);
  const std::string diag_path = join(opts.out_dir, "fig_qg_diagnostics.csv");
  std::ofstream diag(diag_path);
  diag << "t,max_abs,anisotropy\n";
  for (std::size_t k = 0; k < run.traj.times.size(); ++k) {
    diag << num(run.traj.times[k]) << ',' << format_number(run.max_abs[k]) << ','
         << format_number(run.anisotropy[k]) << '\n';
    log << "t=" << num(run.traj.times[k]) << " max|theta|=" << format_number(run.max_abs[k])
        << " anisotropy=" << format_number(run.anisotropy[k]) << '\n';
  }
  po.files.push_back(diag_path);
}

}  // namespace

PresetOutput run_preset(const std::string& name, const PresetOptions& opts, std::ostream& log) {
  ensure_dir(opts.out_dir);
  PresetOutput po;
  if (name == "table2") {
    preset_1d_smooth(po, "table2", 1.0, opts, log);
  } else if (name == "table3") {
    preset_1d_smooth(po, "table3", 2.0, opts, log);
  } else if (name == "table4") {
    preset_table4(po, opts, log);
  } else if (name == "table5") {
    preset_table5(po, opts, log);
  } else if (name == "table6") {
    preset_table6(po, opts, log);
  } else if (name == "fig-disk") {
    preset_fig_disk(po, opts, log);
  } else if (name == "fig-square") {
    preset_fig_square(po, opts, log);
  } else if (name == "fig-mixed") {
    preset_fig_mixed(po, opts, log);
  } else if (name == "fig-qg") {
    preset_fig_qg(po, opts, log);
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  std::string stem = name;
  for (auto& c : stem) {
    if (c == '-') {
      c = '_';
    }
  }
  po.files.push_back(write_plot_script(opts.out_dir, stem, po.files));
  return po;
}

}  // namespace gmqfrac
