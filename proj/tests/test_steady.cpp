#include <doctest.h>

#include <cmath>
#include <vector>

#include "gmqfrac/errors.hpp"
#include "gmqfrac/harness.hpp"
#include "gmqfrac/oracles.hpp"
#include "gmqfrac/presets.hpp"
#include "gmqfrac/steady.hpp"

using namespace gmqfrac;
using doctest::Approx;

namespace {

std::vector<Point> centers_of(const PointSet& ps) {
  return {ps.points().begin(), ps.points().end()};
}

Eigen::VectorXd sample(const PointSet& ps, double (*u)(const Point&)) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(ps.size()));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = u(ps[i]);
  }
  return v;
}

double hat(const Point& x) { return std::max(0.0, 1.0 - x.squaredNorm()); }
double one(const Point&) { return 1.0; }

}  // namespace

TEST_SUITE("steady") {
  TEST_CASE("interpolation") {
    const PointSet ps = uniform_interval(17);
    {
      // well-conditioned shape: coefficients themselves are recovered
      const GmqBasis b(centers_of(ps), FracParams(1, 0.8), 0.2);
      const Eigen::MatrixXd A = phi_matrix(b, ps.points());
      const Interpolant col = interpolate(A, A.col(4));
      CHECK((col.lambda - Eigen::VectorXd::Unit(17, 4)).cwiseAbs().maxCoeff() < 1e-10);
    }
    // eps = 1.5 is the table setting; A_phi is then near the limit of double precision, so the
    // residual is held to the backward-stability bound N * kappa * machine epsilon
    const GmqBasis b(centers_of(ps), FracParams(1, 0.8), 1.5);
    const Eigen::MatrixXd A = phi_matrix(b, ps.points());
    const double bound = 17.0 * condition_estimate(A) * 2.220446e-16;
    const Interpolant c = interpolate(ps, b, sample(ps, one));
    CHECK(c.residual <= bound);
    const Interpolant h = interpolate(ps, b, sample(ps, hat));
    CHECK(h.residual <= bound);
    CHECK_FALSE(h.suspicious());

    Eigen::VectorXd bad = sample(ps, one);
    bad[3] = std::nan("");
    CHECK_THROWS_AS(interpolate(A, bad), ConfigError);
  }

  TEST_CASE("forward operator of a single basis function") {
    const PointSet ps = polar_layout(3, 4);
    const GmqBasis b(centers_of(ps), FracParams(2, 1.2), 0.9);
    const std::vector<Point> tp = polar_test_grid(5, 8, 0.9);
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(b.size()), 6);
    const Eigen::VectorXd full = forward_frac_lap(e, b, tp, ForwardMode::FullSpace);
    const Eigen::VectorXd zext = forward_frac_lap(e, b, tp, ForwardMode::ZeroExtended, 10, 64);
    for (std::size_t i = 0; i < tp.size(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      CHECK(full[k] == Approx(b.frac_lap_phi(6, tp[i])).epsilon(1e-14));
      const double tail = tail_entry_2d(tp[i], ps[6], 0.9, FracParams(2, 1.2), 10, 64);
      CHECK(zext[k] == Approx(full[k] + tail).epsilon(1e-12));
    }
  }

  TEST_CASE("evaluate interpolant") {
    const PointSet ps = polar_layout(3, 5);
    const GmqBasis b(centers_of(ps), FracParams(2, 0.8), 1.0);
    const Eigen::VectorXd s = sample(ps, hat);
    const Interpolant in = interpolate(ps, b, s);
    CHECK((evaluate_interpolant(in.lambda, b, ps.points()) - s).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::VectorXd z =
        evaluate_interpolant(Eigen::VectorXd::Zero(s.size()), b, polar_test_grid(3, 4, 0.5));
    CHECK(z.isZero(0.0));
  }

  TEST_CASE("zero data gives the zero solution") {
    const PointSet ps = polar_layout(4, 4);
    const GmqBasis b(centers_of(ps), FracParams(2, 1.0), 1.0);
    const SystemMatrices sm = assemble(ps, b);
    const PoissonSolution sol =
        solve_poisson(sm, ps, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ps.n_interior())));
    CHECK(sol.U.isZero(0.0));
    CHECK(sol.lambda.isZero(0.0));
    CHECK_THROWS_AS(solve_poisson(sm, ps, Eigen::VectorXd::Zero(3)), ConfigError);
  }

  TEST_CASE("forward and solve are inverse to each other") {
    const PointSet ps = polar_layout(3, 5);
    const GmqBasis b(centers_of(ps), FracParams(2, 0.6), 1.0);
    const SystemMatrices sm = assemble(ps, b);
    const Eigen::MatrixXd card = interior_cardinal(sm);
    Eigen::VectorXd U(static_cast<Eigen::Index>(ps.n_interior()));
    for (std::size_t i = 0; i < ps.n_interior(); ++i) {
      U[static_cast<Eigen::Index>(i)] = std::cos(ps[i][0]) + ps[i][1];
    }
    const Eigen::VectorXd lam = card * U;  // expansion vanishing at the zero-value points
    const Eigen::VectorXd f =
        forward_frac_lap(lam, b, interior_test_points(ps), ForwardMode::ZeroExtended, 10, 64);
    const PoissonSolution sol = solve_poisson(sm, ps, f);
    CHECK((sol.lambda - lam).norm() <= 1e-9 * lam.norm());
    CHECK((sol.U - U).norm() <= 1e-9 * U.norm());
  }

  TEST_CASE("constant right-hand side on the disk converges") {
    // f constant, exact solution (1 - |x|^2)^{alpha/2} up to the constant
    SweepConfig cfg;
    cfg.alpha = 1.0;
    cfg.exact.p = 0.5;
    cfg.eps = EpsRule{false, 1.0};
    cfg.K = 20;
    cfg.report_cond = false;
    for (int L : {3, 5, 7, 9, 11}) {
      cfg.layouts.push_back(Layout::polar(L, L));
    }
    const RunReport rep = run_solve_sweep(cfg);
    for (std::size_t k = 1; k < rep.rows.size(); ++k) {
      CAPTURE(rep.rows[k].N);
      CHECK(rep.rows[k].E < rep.rows[k - 1].E);
    }
  }

  TEST_CASE("exterior data problem") {
    SweepConfig cfg;
    cfg.alpha = 1.0;
    cfg.exact.kind = ExactSolution::Kind::Case1;
    cfg.eps = EpsRule{false, 1.5};
    cfg.K = 64;
    cfg.test_grid = TestGrid::Uniform;
    cfg.layouts.push_back(Layout::polar(11, 11));
    const RunReport rep = run_solve_sweep(cfg);
    CHECK(rep.rows.front().N == 133);
    CHECK(rep.rows.front().E <= 1e-5);
  }

  TEST_CASE("scaled interior singularity is only evaluated where it is defined") {
    ExactSolution ex;
    ex.p = 0.8;
    ex.scale = 2.0;
    CHECK(ex.f_defined(Point(0.3, 0)));
    CHECK_FALSE(ex.f_defined(Point(0.6, 0)));
    CHECK(ex.u(1, Point(0.6, 0)) == 0.0);
  }

  TEST_CASE("pointwise error concentrates near the boundary for f = 1") {
    const double alpha = 0.8;
    const PointSet ps = polar_layout(8, 8);
    const GmqBasis b(centers_of(ps), FracParams(2, alpha), 0.8);
    const SystemMatrices sm = assemble(ps, b, 20, 64);
    const double c = case2_f(2, alpha, 0.5 * alpha, Point::Zero());
    const PoissonSolution sol =
        solve_poisson(sm, ps, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(ps.n_interior())));
    const std::vector<Point> tp = polar_test_grid(20, 32, 0.98);
    const Eigen::VectorXd approx = evaluate_interpolant(sol.lambda, b, tp);
    double inner = 0.0, outer = 0.0;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      const double exact = case2_u(0.5 * alpha, tp[i]) / c;
      const double err = std::abs(approx[static_cast<Eigen::Index>(i)] - exact);
      double& slot = tp[i].norm() < 0.7 ? inner : outer;
      slot = std::max(slot, err);
    }
    CHECK(outer > inner);
  }
}
