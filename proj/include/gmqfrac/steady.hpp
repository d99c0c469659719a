#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "gmqfrac/exterior.hpp"
#include "gmqfrac/geometry.hpp"
#include "gmqfrac/linsys.hpp"
#include "gmqfrac/rbfcore.hpp"

namespace gmqfrac {

struct Interpolant {
  Eigen::VectorXd lambda;
  double residual = 0.0;  // |A_phi lambda - samples|_inf / |samples|_inf

  static constexpr double kWarnResidual = 1e-6;
  bool suspicious() const { return residual > kWarnResidual; }
};

/// Solves A_phi lambda = samples (samples at all N centers).
Interpolant interpolate(const Eigen::MatrixXd& A_phi, const Eigen::VectorXd& samples);
Interpolant interpolate(const PointSet& ps, const GmqBasis& basis,
                        const Eigen::VectorXd& samples);

enum class ForwardMode {
  /// Fractional Laplacian of the interpolant extended by zero outside the
  /// unit interval/disk: sum lambda_j (eps^alpha mu psi_j + tail_j).
  ZeroExtended,
  /// sum lambda_j eps^alpha mu psi_j, the interpolant taken on all of R^d.
  FullSpace,
};

Eigen::VectorXd forward_frac_lap(const Eigen::VectorXd& lambda, const GmqBasis& basis,
                                 std::span<const Point> test_points,
                                 ForwardMode mode = ForwardMode::ZeroExtended, int K = 10,
                                 int M = 64);

/// sum lambda_j phi_j at the given points.
Eigen::VectorXd evaluate_interpolant(const Eigen::VectorXd& lambda, const GmqBasis& basis,
                                     std::span<const Point> points);

struct PoissonSolution {
  Eigen::VectorXd lambda;
  Eigen::VectorXd U;  // interpolant at the equation points
};

/// Solves (-Delta)^{alpha/2} u = f in the domain with u = g outside.
///
/// Equation rows get f(x_i) + tail[g](x_i), value rows get g(x_b); for g = 0
/// this is S lambda = [f; 0]. `f_interior` holds f at the equation points.
PoissonSolution solve_poisson(const SystemMatrices& sm, const PointSet& ps,
                              const Eigen::VectorXd& f_interior,
                              const RadialProfile& g = RadialProfile::zero(), int K = 10,
                              int M = 64);

/// Interior collocation nodes as test points.
std::vector<Point> interior_test_points(const PointSet& ps);
/// n equispaced points on [-a, a].
std::vector<Point> uniform_test_grid_1d(int n = 1001, double a = 0.99);
/// Origin plus n_r radii r_k = r_max k / n_r, each with n_theta angles.
std::vector<Point> polar_test_grid(int n_r = 40, int n_theta = 64, double r_max = 0.95);

}  // namespace gmqfrac
