#include "gmqfrac/exterior.hpp"

#include <cmath>
#include <numbers>

#include "gmqfrac/errors.hpp"
#include "gmqfrac/quadrature.hpp"

namespace gmqfrac {

namespace {

void require_inside(const Point& x, int d) {
  const double r = d == 1 ? std::abs(x[0]) : x.norm();
  if (!(r < 1.0)) {
    throw DomainError("tail integral needs an evaluation point strictly inside the unit ball");
  }
}

void require_integrable(double beta, double alpha) {
  if (!(2.0 * beta < alpha)) {
    throw DomainError("exterior profile decays too slowly: need 2*beta < alpha");
  }
}

// (eps^2 s^2 + |e - c s|^2)^beta s^{alpha - 1 - 2 beta}: the profile after y = e/s.
double mapped_profile(double s, double ex, double ey, const RadialProfile& g, double alpha) {
  const double dx = ex - g.center[0] * s;
  const double dy = ey - g.center[1] * s;
  const double q = g.eps * g.eps * s * s + dx * dx + dy * dy;
  return std::pow(q, g.beta) * std::pow(s, alpha - 1.0 - 2.0 * g.beta);
}

double mapped_kernel(double s, double ex, double ey, const Point& x, int d, double alpha) {
  const double dx = ex - x[0] * s;
  const double dy = ey - x[1] * s;
  return std::pow(dx * dx + dy * dy, -0.5 * (d + alpha));
}

}  // namespace

double RadialProfile::operator()(const Point& y) const {
  if (scale == 0.0) {
    return 0.0;
  }
  return scale * std::pow(eps * eps + (y - center).squaredNorm(), beta);
}

Eigen::MatrixXd TailFactors::reconstruct() const {
  if (blocks.empty()) {
    return {};
  }
  Eigen::MatrixXd out =
      Eigen::MatrixXd::Zero(blocks.front().left.rows(), blocks.front().right.cols());
  for (const auto& b : blocks) {
    out.noalias() += b.left * b.weights.asDiagonal() * b.right;
  }
  return out;
}

double tail_profile_1d(double x, const RadialProfile& g, double alpha, int K) {
  require_inside(Point(x, 0.0), 1);
  require_integrable(g.beta, alpha);
  if (g.scale == 0.0) {
    return 0.0;
  }
  const QuadRule1D rule = gauss_legendre_01(K);
  const Point xp(x, 0.0);
  double acc = 0.0;
  for (int k = 0; k < rule.order(); ++k) {
    const double s = rule.nodes[k];
    acc += rule.weights[k] * (mapped_profile(s, 1.0, 0.0, g, alpha) *
                                  mapped_kernel(s, 1.0, 0.0, xp, 1, alpha) +
                              mapped_profile(s, -1.0, 0.0, g, alpha) *
                                  mapped_kernel(s, -1.0, 0.0, xp, 1, alpha));
  }
  return g.scale * coeff_c(1, alpha) * acc;
}

double tail_profile_2d(const Point& x, const RadialProfile& g, double alpha, int K, int M) {
  require_inside(x, 2);
  require_integrable(g.beta, alpha);
  if (g.scale == 0.0) {
    return 0.0;
  }
  const QuadRule1D rule = gauss_legendre_01(K);
  const PeriodicRule ring = periodic_rule(M);
  double acc = 0.0;
  for (double t : ring.angles) {
    const double ex = std::cos(t);
    const double ey = std::sin(t);
    for (int k = 0; k < rule.order(); ++k) {
      const double s = rule.nodes[k];
      acc += rule.weights[k] * mapped_profile(s, ex, ey, g, alpha) *
             mapped_kernel(s, ex, ey, x, 2, alpha);
    }
  }
  return g.scale * coeff_c(2, alpha) * ring.weight * acc;
}

double tail_entry_1d(double xi, double xj, double eps, const FracParams& p, int K) {
  if (p.d() != 1) {
    throw ConfigError("tail_entry_1d needs d = 1");
  }
  const RadialProfile g{Point(xj, 0.0), eps, 0.5 * (p.alpha() - 1.0), 1.0};
  return tail_profile_1d(xi, g, p.alpha(), K);
}

double tail_entry_2d(const Point& xi, const Point& xj, double eps, const FracParams& p, int K,
                     int M) {
  if (p.d() != 2) {
    throw ConfigError("tail_entry_2d needs d = 2");
  }
  const RadialProfile g{xj, eps, 0.5 * (p.alpha() - 2.0), 1.0};
  return tail_profile_2d(xi, g, p.alpha(), K, M);
}

TailFactors build_tail_factors(const PointSet& ps, const GmqBasis& basis, int K, int M) {
  return build_tail_factors(ps.interior(), basis, K, M);
}

TailFactors build_tail_factors(std::span<const Point> eval, const GmqBasis& basis, int K, int M) {
  const int d = basis.d();
  const double alpha = basis.alpha();
  const std::size_t n_int = eval.size();
  const std::size_t n = basis.size();
  for (const auto& x : eval) {
    require_inside(x, d);
  }
  require_integrable(basis.beta(), alpha);
  const QuadRule1D rule = gauss_legendre_01(K);
  const double c = coeff_c(d, alpha);

  // One block per direction set: 1D uses e = +1 and e = -1, 2D the M angles.
  std::vector<std::vector<Point>> dirs;
  double ring_weight = 1.0;
  if (d == 1) {
    dirs = {{Point(1.0, 0.0)}, {Point(-1.0, 0.0)}};
  } else {
    const PeriodicRule ring = periodic_rule(M);
    ring_weight = ring.weight;
    std::vector<Point> all;
    all.reserve(ring.angles.size());
    for (double t : ring.angles) {
      all.emplace_back(std::cos(t), std::sin(t));
    }
    dirs = {all};
  }

  const RadialProfile unit{Point::Zero(), basis.eps(), basis.beta(), 1.0};
  TailFactors tf;
  for (const auto& set : dirs) {
    const Eigen::Index q = static_cast<Eigen::Index>(set.size()) * K;
    TailFactors::Block b;
    b.left.resize(static_cast<Eigen::Index>(n_int), q);
    b.right.resize(q, static_cast<Eigen::Index>(n));
    b.weights.resize(q);
    for (std::size_t m = 0; m < set.size(); ++m) {
      const Point& e = set[m];
      for (int k = 0; k < K; ++k) {
        const Eigen::Index col = static_cast<Eigen::Index>(m) * K + k;
        const double s = rule.nodes[k];
        b.weights[col] = c * ring_weight * rule.weights[k];
        for (std::size_t i = 0; i < n_int; ++i) {
          b.left(static_cast<Eigen::Index>(i), col) = mapped_kernel(s, e[0], e[1], eval[i], d, alpha);
        }
        for (std::size_t j = 0; j < n; ++j) {
          RadialProfile g = unit;
          g.center = basis.center(j);
          b.right(col, static_cast<Eigen::Index>(j)) = mapped_profile(s, e[0], e[1], g, alpha);
        }
      }
    }
    tf.blocks.push_back(std::move(b));
  }
  return tf;
}

Eigen::VectorXd exterior_data_correction(const RadialProfile& g, const PointSet& ps, int d,
                                         double alpha, int K, int M) {
  require_integrable(g.beta, alpha);
  Eigen::VectorXd out(static_cast<Eigen::Index>(ps.n_interior()));
  for (std::size_t i = 0; i < ps.n_interior(); ++i) {
    out[static_cast<Eigen::Index>(i)] =
        d == 1 ? tail_profile_1d(ps[i][0], g, alpha, K) : tail_profile_2d(ps[i], g, alpha, K, M);
  }
  return out;
}

}  // namespace gmqfrac
