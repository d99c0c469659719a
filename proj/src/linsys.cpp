#include "gmqfrac/linsys.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

LuSolver::LuSolver(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw ConfigError("LU: matrix must be square");
  }
  if (!a.allFinite()) {
    throw ConfigError("LU: matrix has non-finite entries");
  }
  lu_.compute(a);
  const Eigen::MatrixXd& f = lu_.matrixLU();
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    if (f(i, i) == 0.0) {
      throw SingularMatrixError("LU: exact zero pivot at row " + std::to_string(i));
    }
  }
  const double amax = a.cwiseAbs().maxCoeff();
  const double umax = f.triangularView<Eigen::Upper>().toDenseMatrix().cwiseAbs().maxCoeff();
  growth_ = amax > 0.0 ? umax / amax : 1.0;
}

Eigen::VectorXd LuSolver::solve(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != lu_.rows()) {
    throw ConfigError("LU: right-hand side has the wrong length");
  }
  return lu_.solve(rhs);
}

Eigen::MatrixXd LuSolver::solve(const Eigen::MatrixXd& rhs) const {
  if (rhs.rows() != lu_.rows()) {
    throw ConfigError("LU: right-hand side has the wrong number of rows");
  }
  return lu_.solve(rhs);
}

Eigen::MatrixXd phi_matrix(const GmqBasis& basis, std::span<const Point> points) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()),
                      static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis.phi(j, points[i]);
    }
  }
  return out;
}

SystemMatrices assemble(const PointSet& ps, const GmqBasis& basis, int K, int M) {
  if (basis.size() != ps.size() || basis.d() != ps.dim()) {
    throw ConfigError("assemble: basis centers and point set disagree");
  }
  if (basis.kind() != GmqBasis::Kind::Standard) {
    throw ConfigError("assemble: collocation uses the standard GMQ exponent");
  }
  const auto n = static_cast<Eigen::Index>(ps.size());
  const auto ni = static_cast<Eigen::Index>(ps.n_interior());

  SystemMatrices sm;
  sm.n_interior = ps.n_interior();
  sm.d = basis.d();
  sm.alpha = basis.alpha();
  sm.A_phi.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = basis.phi(static_cast<std::size_t>(j), ps[static_cast<std::size_t>(i)]);
      sm.A_phi(i, j) = v;
      sm.A_phi(j, i) = v;
    }
  }
  sm.A_psi_top.resize(ni, n);
  const double scale = std::pow(basis.eps(), basis.alpha()) * coeff_mu(basis.d(), basis.alpha());
  for (Eigen::Index i = 0; i < ni; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sm.A_psi_top(i, j) =
          basis.psi(static_cast<std::size_t>(j), ps[static_cast<std::size_t>(i)]);
    }
  }
  if (ni > 0) {
    sm.tail = build_tail_factors(ps, basis, K, M);
    sm.B_phi = sm.tail.reconstruct();
  } else {
    sm.B_phi.resize(0, n);
  }
  sm.S.resize(n, n);
  sm.S.topRows(ni) = scale * sm.A_psi_top + sm.B_phi;
  sm.S.bottomRows(n - ni) = sm.A_phi.bottomRows(n - ni);
  sm.S_lu = LuSolver(sm.S);
  return sm;
}

Eigen::VectorXd lu_solve(const Eigen::MatrixXd& S, const Eigen::VectorXd& rhs) {
  return LuSolver(S).solve(rhs);
}

Eigen::VectorXd nodal_values(const SystemMatrices& sm, const Eigen::VectorXd& lambda) {
  if (lambda.size() != sm.size()) {
    throw ConfigError("nodal_values: coefficient vector has the wrong length");
  }
  return sm.A_phi.topRows(static_cast<Eigen::Index>(sm.n_interior)) * lambda;
}

double condition_estimate(const Eigen::MatrixXd& a) {
  LuSolver lu(a);
  const double rc = lu.rcond();
  if (!(rc > 0.0)) {
    return std::numeric_limits<double>::infinity();
  }
  return 1.0 / rc;
}

double condition_estimate(const SystemMatrices& sm) { return condition_estimate(sm.A_phi); }

Eigen::MatrixXd interior_cardinal(const SystemMatrices& sm) {
  const auto n = sm.size();
  const auto ni = static_cast<Eigen::Index>(sm.n_interior);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, ni);
  rhs.topRows(ni).setIdentity();
  return LuSolver(sm.A_phi).solve(rhs);
}

Eigen::MatrixXd nodal_operator(const Eigen::MatrixXd& rows, const Eigen::MatrixXd& cardinal) {
  if (rows.cols() != cardinal.rows()) {
    throw ConfigError("nodal_operator: shape mismatch");
  }
  return rows * cardinal;
}

Eigen::MatrixXd nodal_operator(const SystemMatrices& sm) {
  return nodal_operator(sm.frac_rows(), interior_cardinal(sm));
}

Eigen::MatrixXd classical_rows(const PointSet& ps, const GmqBasis& basis) {
  const auto ni = static_cast<Eigen::Index>(ps.n_interior());
  Eigen::MatrixXd out(ni, static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out(i, static_cast<Eigen::Index>(j)) =
          basis.classical_lap_phi(j, ps[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Eigen::MatrixXd gradient_rows(const PointSet& ps, const GmqBasis& basis, int component) {
  if (component < 0 || component >= ps.dim()) {
    throw ConfigError("gradient_rows: component out of range");
  }
  const auto ni = static_cast<Eigen::Index>(ps.n_interior());
  Eigen::MatrixXd out(ni, static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index i = 0; i < ni; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out(i, static_cast<Eigen::Index>(j)) =
          basis.grad_phi(j, ps[static_cast<std::size_t>(i)])[component];
    }
  }
  return out;
}

void write_dense(const Eigen::MatrixXd& m, std::ostream& out) {
  out << m.rows() << ' ' << m.cols() << '\n';
  out.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << m(i, j);
    }
    out << '\n';
  }
}

}  // namespace gmqfrac
