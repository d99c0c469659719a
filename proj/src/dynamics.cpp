#include "gmqfrac/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

namespace {

Eigen::VectorXd sample_interior(const PointSet& ps, const NodalField& f) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(ps.n_interior()));
  for (std::size_t i = 0; i < ps.n_interior(); ++i) {
    out[static_cast<Eigen::Index>(i)] = f(ps[i]);
  }
  if (!out.allFinite()) {
    throw ConfigError("initial data must be finite at the nodes");
  }
  return out;
}

// Step indices at which a snapshot is recorded.
std::vector<bool> snapshot_mask(const EvolutionConfig& cfg) {
  const int n = cfg.steps();
  std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
  mask.front() = true;
  mask.back() = true;
  for (double t : cfg.snapshot_times) {
    const long k = std::lround(t / cfg.dt);
    if (k >= 0 && k <= n) {
      mask[static_cast<std::size_t>(k)] = true;
    }
  }
  return mask;
}

}  // namespace

void EvolutionConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("dt must be positive");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ConfigError("t_end must be nonnegative");
  }
  if (!(chi >= 0.0 && chi <= 1.0)) {
    throw ConfigError("chi must lie in [0, 1]");
  }
  if (!(kappa >= 0.0)) {
    throw ConfigError("kappa must be nonnegative");
  }
}

int EvolutionConfig::steps() const { return static_cast<int>(std::lround(t_end / dt)); }

Trajectory crank_nicolson(const Eigen::MatrixXd& A, const Eigen::VectorXd& u0,
                          const EvolutionConfig& cfg) {
  cfg.validate();
  if (A.rows() != A.cols() || A.rows() != u0.size()) {
    throw ConfigError("crank_nicolson: operator and state sizes disagree");
  }
  const auto n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const LuSolver lhs(I + 0.5 * cfg.dt * A);
  const Eigen::MatrixXd rhs = I - 0.5 * cfg.dt * A;
  const auto mask = snapshot_mask(cfg);

  Trajectory tr;
  Eigen::VectorXd u = u0;
  for (int k = 0;; ++k) {
    if (mask[static_cast<std::size_t>(k)]) {
      tr.times.push_back(k * cfg.dt);
      tr.states.push_back(u);
    }
    if (k == cfg.steps()) {
      break;
    }
    u = lhs.solve(Eigen::VectorXd(rhs * u));
  }
  return tr;
}

Trajectory crank_nicolson_mixed(const PointSet& ps, const GmqBasis& basis,
                                const EvolutionConfig& cfg, const NodalField& u0, int K, int M) {
  cfg.validate();
  const SystemMatrices sm = assemble(ps, basis, K, M);
  const Eigen::MatrixXd card = interior_cardinal(sm);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(card.cols(), card.cols());
  if (cfg.chi > 0.0) {
    A += cfg.chi * nodal_operator(sm.frac_rows(), card);
  }
  if (cfg.chi < 1.0) {
    A += (1.0 - cfg.chi) * nodal_operator(classical_rows(ps, basis), card);
  }
  return crank_nicolson(A, sample_interior(ps, u0), cfg);
}

Eigen::VectorXd ssp_rk3_step(const NodalRhs& L, const Eigen::VectorXd& u, double dt) {
  const Eigen::VectorXd u1 = u + dt * L(u);
  const Eigen::VectorXd u2 = 0.75 * u + 0.25 * (u1 + dt * L(u1));
  return u / 3.0 + (2.0 / 3.0) * (u2 + dt * L(u2));
}

QgOperators build_qg_operators(const PointSet& ps, double eps, double alpha, int K, int M) {
  if (ps.dim() != 2) {
    throw ConfigError("the quasi-geostrophic model is two-dimensional");
  }
  std::vector<Point> centers(ps.points().begin(), ps.points().end());
  QgOperators ops;
  const GmqBasis theta_basis(centers, FracParams(2, alpha), eps);
  const SystemMatrices sm = assemble(ps, theta_basis, K, M);
  const Eigen::MatrixXd card = interior_cardinal(sm);
  ops.D_frac = nodal_operator(sm.frac_rows(), card);
  ops.Dx = nodal_operator(gradient_rows(ps, theta_basis, 0), card);
  ops.Dy = nodal_operator(gradient_rows(ps, theta_basis, 1), card);

  const GmqBasis psi_basis(centers, FracParams(2, 1.0), eps);
  ops.half = alpha == 1.0 ? sm : assemble(ps, psi_basis, K, M);
  ops.Gx = gradient_rows(ps, psi_basis, 0);
  ops.Gy = gradient_rows(ps, psi_basis, 1);
  return ops;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> qg_velocity(const Eigen::VectorXd& theta,
                                                        const QgOperators& ops) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ops.half.size());
  rhs.head(theta.size()) = -theta;
  const Eigen::VectorXd lambda = ops.half.S_lu.solve(rhs);
  return {-(ops.Gy * lambda), ops.Gx * lambda};
}

Eigen::VectorXd qg_rhs(const Eigen::VectorXd& theta, const QgOperators& ops, double kappa,
                       bool advect) {
  Eigen::VectorXd out = -kappa * (ops.D_frac * theta);
  if (advect) {
    const auto [u1, u2] = qg_velocity(theta, ops);
    out -= u1.cwiseProduct(ops.Dx * theta) + u2.cwiseProduct(ops.Dy * theta);
  }
  return out;
}

double anisotropy_ratio(std::span<const Point> points, const Eigen::VectorXd& theta) {
  double mass = 0.0;
  Point c = Point::Zero();
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double w = theta[i] * theta[i];
    mass += w;
    c += w * points[static_cast<std::size_t>(i)];
  }
  if (!(mass > 0.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  c /= mass;
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const Point r = points[static_cast<std::size_t>(i)] - c;
    m += theta[i] * theta[i] * r * r.transpose();
  }
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
  return ev[1] / ev[0];
}

QgRun run_qg(const PointSet& ps, const QgOperators& ops, const EvolutionConfig& cfg,
             const NodalField& theta0, bool advect) {
  cfg.validate();
  const Eigen::VectorXd start = sample_interior(ps, theta0);
  const double limit = 10.0 * start.lpNorm<Eigen::Infinity>();
  const auto mask = snapshot_mask(cfg);
  const NodalRhs L = [&](const Eigen::VectorXd& th) { return qg_rhs(th, ops, cfg.kappa, advect); };

  QgRun run;
  Eigen::VectorXd th = start;
  for (int k = 0;; ++k) {
    if (mask[static_cast<std::size_t>(k)]) {
      run.traj.times.push_back(k * cfg.dt);
      run.traj.states.push_back(th);
      run.anisotropy.push_back(anisotropy_ratio(ps.interior(), th));
      run.max_abs.push_back(th.lpNorm<Eigen::Infinity>());
    }
    if (k == cfg.steps()) {
      break;
    }
    th = ssp_rk3_step(L, th, cfg.dt);
    const double m = th.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(m) || (limit > 0.0 && m > limit)) {
      throw BlowUpError("quasi-geostrophic run blew up at t = " +
                        std::to_string((k + 1) * cfg.dt));
    }
  }
  return run;
}

}  // namespace gmqfrac
