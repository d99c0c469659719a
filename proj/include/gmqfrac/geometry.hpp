#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace gmqfrac {

/// Collocation coordinates. One-dimensional problems use the first
/// component and keep the second at zero.
using Point = Eigen::Vector2d;

enum class DomainKind { Interval, UnitDisk, EmbeddedSquare };

/// Computational domain. The embedded square (-w, w)^2 sits inside the unit
/// disk; tail integrals are always taken over the complement of the unit
/// interval or disk.
struct Domain {
  DomainKind kind = DomainKind::Interval;
  double half_width = 0.0;

  static Domain interval() { return {DomainKind::Interval, 1.0}; }
  static Domain unit_disk() { return {DomainKind::UnitDisk, 1.0}; }
  static Domain embedded_square(double w);

  int dim() const { return kind == DomainKind::Interval ? 1 : 2; }
  bool contains_open(const Point& x) const;
};

/// Ordered collocation centers. The first n_interior points carry the PDE
/// equation; the remaining ones carry a value condition (boundary points,
/// or points of the disk outside an embedded domain).
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> points, std::size_t n_interior);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  std::size_t n_interior() const { return n_interior_; }
  std::size_t n_boundary() const { return points_.size() - n_interior_; }

  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  std::span<const Point> interior() const {
    return std::span<const Point>(points_).first(n_interior_);
  }
  std::span<const Point> boundary() const {
    return std::span<const Point>(points_).subspan(n_interior_);
  }
  bool is_interior(std::size_t i) const { return i < n_interior_; }

 private:
  int dim_;
  std::vector<Point> points_;
  std::size_t n_interior_;
};

struct MeshStats {
  double h = 0.0;    // fill distance (sampled)
  double q = 0.0;    // separation radius
  double rho = 0.0;  // h / q
};

/// n equispaced points on [-1, 1]; the endpoints are the two boundary points.
PointSet uniform_interval(int n);

/// Polar layout (l/L)(cos(2j pi/(J+1)), sin(2j pi/(J+1))), 0 <= l <= L,
/// 0 <= j <= J, with the origin kept once: N = L(J+1) + 1. The l = L ring is
/// the boundary set.
PointSet polar_layout(int L, int J);

/// Uniform grid of step h on [-1,1]^2 clipped to the closed unit disk.
/// Points in the open domain carry the equation, the rest of the disk gets
/// zero-value rows. Throws ConfigError when no grid point is interior.
PointSet clipped_grid(double h, const Domain& domain);

/// Grid points of step h strictly inside the unit disk, plus round(2/h)
/// equispaced boundary points on the unit circle (at least 4).
PointSet disk_grid(double h);

/// Half the minimal pairwise distance. Requires at least two points.
double separation_radius(std::span<const Point> points, int dim);

/// sup over the domain of the distance to the nearest point, approximated on
/// a sample grid of spacing `sample_step` (capped to keep at most ~2e5
/// samples in 2D).
double fill_distance(std::span<const Point> points, const Domain& domain,
                     double sample_step);

/// Fill distance sampled 10x finer than q, separation radius and their ratio.
MeshStats mesh_stats(const PointSet& ps, const Domain& domain);

/// CSV with header `x1,x2,kind`, kind being `interior` or `boundary`.
void write_csv(const PointSet& ps, std::ostream& out);

}  // namespace gmqfrac
