#include "gmqfrac/steady.hpp"

#include <cmath>
#include <numbers>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

Interpolant interpolate(const Eigen::MatrixXd& A_phi, const Eigen::VectorXd& samples) {
  if (!samples.allFinite()) {
    throw ConfigError("interpolate: samples must be finite");
  }
  Interpolant out;
  out.lambda = LuSolver(A_phi).solve(samples);
  const double scale = samples.lpNorm<Eigen::Infinity>();
  const double res = (A_phi * out.lambda - samples).lpNorm<Eigen::Infinity>();
  out.residual = scale > 0.0 ? res / scale : res;
  return out;
}

Interpolant interpolate(const PointSet& ps, const GmqBasis& basis,
                        const Eigen::VectorXd& samples) {
  if (samples.size() != static_cast<Eigen::Index>(ps.size())) {
    throw ConfigError("interpolate: one sample per center expected");
  }
  return interpolate(phi_matrix(basis, ps.points()), samples);
}

Eigen::VectorXd forward_frac_lap(const Eigen::VectorXd& lambda, const GmqBasis& basis,
                                 std::span<const Point> test_points, ForwardMode mode, int K,
                                 int M) {
  if (lambda.size() != static_cast<Eigen::Index>(basis.size())) {
    throw ConfigError("forward_frac_lap: coefficient vector has the wrong length");
  }
  const auto nt = static_cast<Eigen::Index>(test_points.size());
  Eigen::MatrixXd psi(nt, lambda.size());
  for (Eigen::Index i = 0; i < nt; ++i) {
    for (Eigen::Index j = 0; j < lambda.size(); ++j) {
      psi(i, j) = basis.frac_lap_phi(static_cast<std::size_t>(j),
                                     test_points[static_cast<std::size_t>(i)]);
    }
  }
  Eigen::VectorXd out = psi * lambda;
  if (mode == ForwardMode::ZeroExtended) {
    const TailFactors tf = build_tail_factors(test_points, basis, K, M);
    for (const auto& b : tf.blocks) {
      out.noalias() += b.left * (b.weights.asDiagonal() * (b.right * lambda));
    }
  }
  return out;
}

Eigen::VectorXd evaluate_interpolant(const Eigen::VectorXd& lambda, const GmqBasis& basis,
                                     std::span<const Point> points) {
  return phi_matrix(basis, points) * lambda;
}

PoissonSolution solve_poisson(const SystemMatrices& sm, const PointSet& ps,
                              const Eigen::VectorXd& f_interior, const RadialProfile& g, int K,
                              int M) {
  const auto ni = static_cast<Eigen::Index>(ps.n_interior());
  if (f_interior.size() != ni) {
    throw ConfigError("solve_poisson: one right-hand side value per equation point expected");
  }
  if (!f_interior.allFinite()) {
    throw ConfigError("solve_poisson: right-hand side must be finite");
  }
  if (sm.size() != static_cast<Eigen::Index>(ps.size())) {
    throw ConfigError("solve_poisson: system and point set disagree");
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(sm.size());
  rhs.head(ni) = f_interior;
  if (g.scale != 0.0) {
    rhs.head(ni) += exterior_data_correction(g, ps, sm.d, sm.alpha, K, M);
    for (Eigen::Index i = ni; i < sm.size(); ++i) {
      rhs[i] = g(ps[static_cast<std::size_t>(i)]);
    }
  }
  PoissonSolution out;
  out.lambda = sm.S_lu.solve(rhs);
  out.U = nodal_values(sm, out.lambda);
  return out;
}

std::vector<Point> interior_test_points(const PointSet& ps) {
  const auto in = ps.interior();
  return {in.begin(), in.end()};
}

std::vector<Point> uniform_test_grid_1d(int n, double a) {
  if (n < 2) {
    throw ConfigError("uniform_test_grid_1d: need at least two points");
  }
  std::vector<Point> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.emplace_back(-a + 2.0 * a * i / (n - 1), 0.0);
  }
  return out;
}

std::vector<Point> polar_test_grid(int n_r, int n_theta, double r_max) {
  if (n_r < 1 || n_theta < 1 || !(r_max > 0.0 && r_max < 1.0)) {
    throw ConfigError("polar_test_grid: invalid layout");
  }
  std::vector<Point> out{Point::Zero()};
  for (int k = 1; k <= n_r; ++k) {
    const double r = r_max * k / n_r;
    for (int m = 0; m < n_theta; ++m) {
      const double t = 2.0 * std::numbers::pi * m / n_theta;
      out.emplace_back(r * std::cos(t), r * std::sin(t));
    }
  }
  return out;
}

}  // namespace gmqfrac
