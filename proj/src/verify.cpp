#include "gmqfrac/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gmqfrac/errors.hpp"
#include "gmqfrac/exterior.hpp"
#include "gmqfrac/geometry.hpp"
#include "gmqfrac/linsys.hpp"
#include "gmqfrac/oracles.hpp"
#include "gmqfrac/quadrature.hpp"
#include "gmqfrac/rbfcore.hpp"
#include "gmqfrac/specfun.hpp"

namespace gmqfrac {

namespace {

CheckResult finish(CheckResult r) {
  r.passed = r.measured <= r.tolerance;
  return r;
}

}  // namespace

CheckResult check_identity(bool alternative, int offsets, std::uint64_t seed, double tol) {
  CheckResult r;
  r.name = alternative ? "alternative GMQ identity vs hypersingular oracle"
                       : "GMQ identity vs hypersingular oracle";
  r.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> off(-1.5, 1.5);
  std::uniform_real_distribution<double> shape(0.5, 2.0);
  int count = 0;
  for (int d : {1, 2}) {
    for (double a : {0.4, 0.8, 1.0, 1.2, 1.6}) {
      if (!alternative && d == 1 && a == 1.0) {
        continue;
      }
      for (int k = 0; k < offsets; ++k) {
        const double eps = shape(rng);
        const Point x(off(rng), d == 2 ? off(rng) : 0.0);
        const std::vector<Point> c{Point::Zero()};
        double exact = 0.0;
        OracleProfile v;
        if (alternative) {
          const GmqBasis b = GmqBasis::alternative(c, d, a, eps);
          exact = b.frac_lap_phi_alt(0, x);
          v = OracleProfile::gmq(d, Point::Zero(), eps, b.beta());
        } else {
          const GmqBasis b(c, FracParams(d, a), eps);
          exact = b.frac_lap_phi(0, x);
          v = OracleProfile::gmq(d, Point::Zero(), eps, b.beta());
        }
        const double got = hypersingular_oracle(v, d, a, x);
        const double dev = std::abs(got - exact) / std::abs(exact);
        if (dev > r.measured) {
          r.measured = dev;
          std::ostringstream os;
          os << "worst at d=" << d << " alpha=" << a << " eps=" << eps << " x=(" << x[0] << ","
             << x[1] << ")";
          r.detail = os.str();
        }
        ++count;
      }
    }
  }
  r.detail += " over " + std::to_string(count) + " samples";
  return finish(r);
}

CheckResult check_gauss_exactness(double tol) {
  CheckResult r;
  r.name = "Gauss-Legendre exactness on monomials";
  r.tolerance = tol;
  for (int K = 1; K <= 32; ++K) {
    const QuadRule1D rule = gauss_legendre_01(K);
    for (int p = 0; p <= 2 * K - 1; ++p) {
      const double got = rule.integrate([p](double s) { return std::pow(s, p); });
      const double exact = 1.0 / (p + 1);
      const double dev = std::abs(got - exact);
      if (dev > r.measured) {
        r.measured = dev;
        r.detail = "worst at K=" + std::to_string(K) + " degree=" + std::to_string(p);
      }
    }
  }
  return finish(r);
}

CheckResult check_hypergeometric(double tol) {
  CheckResult r;
  r.name = "2F1 closed forms";
  r.tolerance = tol;
  auto track = [&](double got, double exact, const std::string& what) {
    const double dev = std::abs(got - exact) / std::max(1.0, std::abs(exact));
    if (dev > r.measured) {
      r.measured = dev;
      r.detail = "worst at " + what;
    }
  };
  for (int i = -18; i <= 19; ++i) {
    const double z = 0.05 * i;
    if (z == 0.0) {
      continue;
    }
    track(z * gauss_2f1(1.0, 1.0, 2.0, z), -std::log1p(-z), "log form z=" + std::to_string(z));
    for (double a : {-1.5, -0.3, 0.5, 1.0, 2.7}) {
      for (double b : {0.25, 1.0, 3.5}) {
        track(gauss_2f1(a, b, b, z), std::pow(1.0 - z, -a),
              "binomial form a=" + std::to_string(a) + " z=" + std::to_string(z));
      }
    }
  }
  return finish(r);
}

CheckResult check_linear_consistency(std::uint64_t seed, double tol) {
  // Systems count as well-conditioned when kappa_1(S) <= 1e6, so that the
  // expected recovery error kappa * 1e-16 stays near the tolerance.
  constexpr double kWellConditioned = 1e6;
  CheckResult r;
  r.name = "manufactured coefficients recovered from S";
  r.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  int used = 0;
  int skipped = 0;
  auto run = [&](const PointSet& ps, double alpha, const std::string& label) {
    const std::vector<Point> c(ps.points().begin(), ps.points().end());
    const GmqBasis basis(c, FracParams(ps.dim(), alpha), 1.0);
    const SystemMatrices sm = assemble(ps, basis, 10, 64);
    if (condition_estimate(sm.S) > kWellConditioned) {
      ++skipped;
      return;
    }
    ++used;
    Eigen::VectorXd lam(sm.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      lam[i] = g(rng);
    }
    const Eigen::VectorXd rhs = sm.S * lam;
    const Eigen::VectorXd got = sm.S_lu.solve(rhs);
    const double dev = (got - lam).norm() / lam.norm();
    if (dev > r.measured) {
      r.measured = dev;
      r.detail = "worst at " + label;
    }
  };
  for (double a : {0.4, 0.8, 1.2, 1.6}) {
    const std::string tag = " alpha=" + std::to_string(a);
    for (int n : {3, 5, 7, 9}) {
      run(uniform_interval(n), a, "1D n=" + std::to_string(n) + tag);
    }
    run(polar_layout(1, 3), a, "2D N=5" + tag);
    run(polar_layout(2, 3), a, "2D N=9" + tag);
    run(polar_layout(3, 3), a, "2D N=13" + tag);
    run(polar_layout(4, 7), a, "2D N=33" + tag);
  }
  r.detail += "; " + std::to_string(used) + " systems, " + std::to_string(skipped) +
              " skipped as ill-conditioned";
  if (used < 10) {
    r.measured = std::max(r.measured, 1.0);
    r.detail += " (too few well-conditioned systems)";
  }
  return finish(r);
}

CheckResult check_tail_quadrature(std::uint64_t seed, double tol) {
  CheckResult r;
  r.name = "tail quadrature vs adaptive tail oracle";
  r.tolerance = tol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  std::uniform_real_distribution<double> al(0.3, 1.8);
  for (int k = 0; k < 5; ++k) {
    for (int d : {1, 2}) {
      double a = al(rng);
      if (d == 1 && std::abs(a - 1.0) < 1e-3) {
        a = 0.9;
      }
      const Point xi(u(rng), d == 2 ? u(rng) : 0.0);
      const Point xj(u(rng), d == 2 ? u(rng) : 0.0);
      const double eps = 1.0;
      const FracParams p(d, a);
      const double got = d == 1 ? tail_entry_1d(xi[0], xj[0], eps, p, 40)
                                : tail_entry_2d(xi, xj, eps, p, 40, 128);
      const double ref =
          tail_oracle(OracleProfile::gmq(d, xj, eps, 0.5 * (a - d)), d, a, xi);
      const double dev = std::abs(got - ref) / std::abs(ref);
      if (dev > r.measured) {
        r.measured = dev;
        std::ostringstream os;
        os << "worst at d=" << d << " alpha=" << a;
        r.detail = os.str();
      }
    }
  }
  return finish(r);
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  return {check_identity(false, 3, seed), check_identity(true, 3, seed + 1),
          check_gauss_exactness(), check_hypergeometric(), check_linear_consistency(seed + 2),
          check_tail_quadrature(seed + 3)};
}

}  // namespace gmqfrac
