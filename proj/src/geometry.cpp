#include "gmqfrac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include "gmqfrac/errors.hpp"

namespace gmqfrac {

namespace {

constexpr double kOnCircle = 1e-12;

double distance(const Point& a, const Point& b, int dim) {
  return dim == 1 ? std::abs(a[0] - b[0]) : (a - b).norm();
}

}  // namespace

Domain Domain::embedded_square(double w) {
  if (!(w > 0.0) || w * std::sqrt(2.0) > 1.0 + 1e-15) {
    throw ConfigError("embedded square half-width must satisfy 0 < w <= sqrt(2)/2");
  }
  return {DomainKind::EmbeddedSquare, w};
}

bool Domain::contains_open(const Point& x) const {
  switch (kind) {
    case DomainKind::Interval:
      return std::abs(x[0]) < 1.0;
    case DomainKind::UnitDisk:
      return x.squaredNorm() < 1.0;
    case DomainKind::EmbeddedSquare:
      return std::abs(x[0]) < half_width && std::abs(x[1]) < half_width;
  }
  return false;
}

PointSet::PointSet(int dim, std::vector<Point> points, std::size_t n_interior)
    : dim_(dim), points_(std::move(points)), n_interior_(n_interior) {
  if (dim != 1 && dim != 2) {
    throw ConfigError("PointSet: dimension must be 1 or 2");
  }
  if (n_interior_ > points_.size()) {
    throw ConfigError("PointSet: more interior points than points");
  }
  if (dim_ == 1) {
    for (const auto& p : points_) {
      if (p[1] != 0.0) {
        throw ConfigError("PointSet: 1D points must have zero second component");
      }
    }
  }
  if (points_.size() >= 2 && !(separation_radius(points_, dim_) > 0.0)) {
    throw ConfigError("PointSet: points must be distinct");
  }
}

PointSet uniform_interval(int n) {
  if (n < 3) {
    throw ConfigError("uniform_interval: need at least 3 points");
  }
  std::vector<Point> pts;
  pts.reserve(n);
  const double step = 2.0 / (n - 1);
  for (int i = 1; i < n - 1; ++i) {
    pts.emplace_back(-1.0 + step * i, 0.0);
  }
  pts.emplace_back(-1.0, 0.0);
  pts.emplace_back(1.0, 0.0);
  return PointSet(1, std::move(pts), static_cast<std::size_t>(n - 2));
}

PointSet polar_layout(int L, int J) {
  if (L < 1 || J < 1) {
    throw ConfigError("polar_layout: L and J must be positive");
  }
  std::vector<Point> interior{Point(0.0, 0.0)};
  std::vector<Point> ring;
  for (int l = 1; l <= L; ++l) {
    const double r = static_cast<double>(l) / L;
    for (int j = 0; j <= J; ++j) {
      const double t = 2.0 * j * std::numbers::pi / (J + 1);
      Point p(r * std::cos(t), r * std::sin(t));
      (l == L ? ring : interior).push_back(p);
    }
  }
  const std::size_t n_int = interior.size();
  interior.insert(interior.end(), ring.begin(), ring.end());
  return PointSet(2, std::move(interior), n_int);
}

PointSet clipped_grid(double h, const Domain& domain) {
  if (!(h > 0.0 && h <= 1.0)) {
    throw ConfigError("clipped_grid: step must lie in (0, 1]");
  }
  if (domain.dim() != 2) {
    throw ConfigError("clipped_grid: needs a two-dimensional domain");
  }
  const int n = static_cast<int>(std::floor(2.0 / h + 1e-9));
  std::vector<Point> eq;
  std::vector<Point> zero;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Point p(-1.0 + i * h, -1.0 + j * h);
      if (p.squaredNorm() > 1.0 + kOnCircle) {
        continue;
      }
      (domain.contains_open(p) ? eq : zero).push_back(p);
    }
  }
  if (eq.empty()) {
    throw ConfigError("clipped_grid: no grid point inside the domain; refine h");
  }
  const std::size_t n_int = eq.size();
  eq.insert(eq.end(), zero.begin(), zero.end());
  return PointSet(2, std::move(eq), n_int);
}

PointSet disk_grid(double h) {
  if (!(h > 0.0 && h <= 1.0)) {
    throw ConfigError("disk_grid: step must lie in (0, 1]");
  }
  const int n = static_cast<int>(std::floor(1.0 / h + 1e-9));
  std::vector<Point> pts;
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      Point p(i * h, j * h);
      if (p.squaredNorm() < 1.0 - kOnCircle) {
        pts.push_back(p);
      }
    }
  }
  const std::size_t n_int = pts.size();
  const int nb = std::max(4, static_cast<int>(std::lround(2.0 / h)));
  for (int m = 0; m < nb; ++m) {
    const double t = 2.0 * std::numbers::pi * m / nb;
    pts.emplace_back(std::cos(t), std::sin(t));
  }
  return PointSet(2, std::move(pts), n_int);
}

double separation_radius(std::span<const Point> points, int dim) {
  if (points.size() < 2) {
    throw ConfigError("separation_radius: need at least two points");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, distance(points[i], points[j], dim));
    }
  }
  return 0.5 * best;
}

double fill_distance(std::span<const Point> points, const Domain& domain,
                     double sample_step) {
  if (points.empty()) {
    throw ConfigError("fill_distance: empty point set");
  }
  const int dim = domain.dim();
  auto nearest = [&](const Point& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : points) {
      best = std::min(best, distance(x, p, dim));
    }
    return best;
  };

  double h = 0.0;
  if (dim == 1) {
    const int n = std::max(2, static_cast<int>(std::ceil(2.0 / sample_step)));
    for (int i = 0; i <= n; ++i) {
      const Point x(-1.0 + 2.0 * i / n, 0.0);
      h = std::max(h, nearest(x));
    }
    return h;
  }
  const double extent = domain.kind == DomainKind::EmbeddedSquare ? domain.half_width : 1.0;
  int n = std::max(2, static_cast<int>(std::ceil(2.0 * extent / sample_step)));
  n = std::min(n, 450);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Point x(-extent + 2.0 * extent * i / n, -extent + 2.0 * extent * j / n);
      // closure of the domain
      const bool inside = domain.kind == DomainKind::EmbeddedSquare
                              ? true
                              : x.squaredNorm() <= 1.0 + kOnCircle;
      if (inside) {
        h = std::max(h, nearest(x));
      }
    }
  }
  return h;
}

MeshStats mesh_stats(const PointSet& ps, const Domain& domain) {
  MeshStats s;
  s.q = separation_radius(ps.points(), ps.dim());
  s.h = fill_distance(ps.points(), domain, s.q / 10.0);
  s.rho = s.h / s.q;
  return s;
}

void write_csv(const PointSet& ps, std::ostream& out) {
  out << "x1,x2,kind\n";
  out.precision(17);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out << ps[i][0] << ',' << ps[i][1] << ',' << (ps.is_interior(i) ? "interior" : "boundary")
        << '\n';
  }
}

}  // namespace gmqfrac
