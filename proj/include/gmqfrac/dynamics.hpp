#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "gmqfrac/geometry.hpp"
#include "gmqfrac/linsys.hpp"
#include "gmqfrac/rbfcore.hpp"

namespace gmqfrac {

struct EvolutionConfig {
  double dt = 1e-3;
  double t_end = 0.5;
  double chi = 1.0;
  double kappa = 0.0;
  /// Output times; t = 0 and t_end are always recorded.
  std::vector<double> snapshot_times;

  /// Throws ConfigError unless dt > 0, t_end >= 0, 0 <= chi <= 1, kappa >= 0.
  void validate() const;
  int steps() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;  // nodal values at the equation points
};

using NodalField = std::function<double(const Point&)>;
using NodalRhs = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// (I + dt/2 A) u^{n+1} = (I - dt/2 A) u^n with the left matrix factored once.
Trajectory crank_nicolson(const Eigen::MatrixXd& A, const Eigen::VectorXd& u0,
                          const EvolutionConfig& cfg);

/// u_t + chi (-Delta)^{alpha/2} u + (1 - chi)(-Delta) u = 0, zero exterior data.
Trajectory crank_nicolson_mixed(const PointSet& ps, const GmqBasis& basis,
                                const EvolutionConfig& cfg, const NodalField& u0, int K = 10,
                                int M = 64);

/// Shu-Osher three-stage third-order SSP Runge-Kutta step.
Eigen::VectorXd ssp_rk3_step(const NodalRhs& L, const Eigen::VectorXd& u, double dt);

/// Precomputed nodal operators for the quasi-geostrophic right-hand side.
struct QgOperators {
  Eigen::MatrixXd D_frac;   // (-Delta)^{alpha/2} on nodal theta
  Eigen::MatrixXd Dx, Dy;   // nodal gradient of theta
  SystemMatrices half;      // alpha = 1 collocation system for the stream function
  Eigen::MatrixXd Gx, Gy;   // gradient rows of the alpha = 1 basis at the equation points
};

QgOperators build_qg_operators(const PointSet& ps, double eps, double alpha, int K = 10,
                               int M = 64);

/// -u . grad(theta) - kappa D_frac theta with u = (-d2 Psi, d1 Psi) and
/// (-Delta)^{1/2} Psi = -theta. `advect = false` keeps only the dissipation.
Eigen::VectorXd qg_rhs(const Eigen::VectorXd& theta, const QgOperators& ops, double kappa,
                       bool advect = true);

/// Velocity (u1, u2) at the equation points.
std::pair<Eigen::VectorXd, Eigen::VectorXd> qg_velocity(const Eigen::VectorXd& theta,
                                                        const QgOperators& ops);

struct QgRun {
  Trajectory traj;
  std::vector<double> anisotropy;  // per snapshot
  std::vector<double> max_abs;     // per snapshot
};

/// Ratio of the principal second moments of theta^2 about its centroid.
double anisotropy_ratio(std::span<const Point> points, const Eigen::VectorXd& theta);

/// SSP-RK3 integration. Throws BlowUpError once max|theta| exceeds 10x its
/// initial value.
QgRun run_qg(const PointSet& ps, const QgOperators& ops, const EvolutionConfig& cfg,
             const NodalField& theta0, bool advect = true);

}  // namespace gmqfrac
