#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <cstddef>
#include <iosfwd>
#include <span>

#include "gmqfrac/exterior.hpp"
#include "gmqfrac/geometry.hpp"
#include "gmqfrac/rbfcore.hpp"

namespace gmqfrac {

/// Dense LU with partial pivoting. Construction throws SingularMatrixError on
/// an exactly zero pivot and ConfigError on non-finite input.
class LuSolver {
 public:
  LuSolver() = default;
  explicit LuSolver(const Eigen::MatrixXd& a);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;
  Eigen::Index size() const { return lu_.rows(); }

  /// Reciprocal 1-norm condition estimate (Hager/Higham).
  double rcond() const { return lu_.rcond(); }
  /// max|U| / max|A|.
  double pivot_growth() const { return growth_; }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double growth_ = 1.0;
};

/// Collocation matrices for one point set and basis. Rows are ordered
/// equation points first (n_interior of them), then zero-value points.
struct SystemMatrices {
  std::size_t n_interior = 0;
  int d = 1;
  double alpha = 0.0;
  Eigen::MatrixXd A_phi;      // N x N, phi_j(x_i)
  Eigen::MatrixXd A_psi_top;  // N_int x N, psi_j(x_i)
  TailFactors tail;
  Eigen::MatrixXd B_phi;      // N_int x N, reconstructed tail
  Eigen::MatrixXd S;          // [eps^alpha mu A_psi_top + B_phi ; A_phi bottom rows]
  LuSolver S_lu;

  Eigen::Index size() const { return A_phi.rows(); }
  /// Equation rows of S: the zero-extended fractional Laplacian of each phi_j.
  Eigen::MatrixXd frac_rows() const { return S.topRows(static_cast<Eigen::Index>(n_interior)); }
};

/// Assembles and factors S. K and M control the tail quadrature.
SystemMatrices assemble(const PointSet& ps, const GmqBasis& basis, int K = 10, int M = 64);

/// Rows of phi_j(x) for arbitrary points.
Eigen::MatrixXd phi_matrix(const GmqBasis& basis, std::span<const Point> points);

Eigen::VectorXd lu_solve(const Eigen::MatrixXd& S, const Eigen::VectorXd& rhs);

/// U = (A_phi)_{1:N_int, :} Lambda.
Eigen::VectorXd nodal_values(const SystemMatrices& sm, const Eigen::VectorXd& lambda);

/// kappa_1 estimate; +inf when the estimator reports rcond = 0.
double condition_estimate(const Eigen::MatrixXd& a);
/// kappa_1(A_phi), the number reported per run.
double condition_estimate(const SystemMatrices& sm);

/// X with A_phi X = [I; 0] (N x N_int): maps nodal interior values, zero at
/// the zero-value points, to expansion coefficients.
Eigen::MatrixXd interior_cardinal(const SystemMatrices& sm);

/// D = rows * interior_cardinal, rows being N_int x N operator rows.
Eigen::MatrixXd nodal_operator(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& cardinal);
/// D_frac from the equation rows of S.
Eigen::MatrixXd nodal_operator(const SystemMatrices& sm);

/// -Delta phi_j(x_i) for the equation points.
Eigen::MatrixXd classical_rows(const PointSet& ps, const GmqBasis& basis);
/// d phi_j / d x_c at the equation points, c in {0, 1}.
Eigen::MatrixXd gradient_rows(const PointSet& ps, const GmqBasis& basis, int component);

/// Plain-text dump: first line "rows cols", then one row per line.
void write_dense(const Eigen::MatrixXd& m, std::ostream& out);

}  // namespace gmqfrac
