#pragma once

// Capability interface shared by every convex body. Points are Eigen vectors
// in the ambient space R^{n+1}; the boundary M has dimension n.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperarea::geometry {

using Vec = Eigen::VectorXd;

enum class BoundKind { exact, upper_bound };
std::string_view to_string(BoundKind kind);

struct Distance {
  double value = 0;
  BoundKind kind = BoundKind::exact;
};

class ConvexBody {
 public:
  virtual ~ConvexBody() = default;

  virtual std::string id() const = 0;
  virtual std::string type_name() const = 0;
  virtual int ambient_dimension() const = 0;
  int surface_dimension() const { return ambient_dimension() - 1; }

  /// h(u) = max_{z in body} <u, z>; u need not be unit.
  virtual double support(const Vec& u) const = 0;
  /// n-dimensional measure of the boundary.
  virtual double boundary_area() const = 0;
  virtual double enclosed_volume() const = 0;

  /// Shortest surface path length. Throws DomainError for off-surface points.
  virtual Distance intrinsic_distance(const Vec& x, const Vec& y) const = 0;
  /// A certified lower bound on the intrinsic distance. Bodies with exact
  /// distances return the exact value.
  virtual double intrinsic_distance_lower(const Vec& x, const Vec& y) const;
  /// A tighter (and possibly much slower) certified lower bound.
  virtual double intrinsic_distance_lower_refined(const Vec& x, const Vec& y) const {
    return intrinsic_distance_lower(x, y);
  }

  /// `count` boundary points, uniform with respect to boundary measure.
  virtual std::vector<Vec> sample_boundary(std::uint64_t seed, int count) const = 0;
  /// Points where displacement extremes are known to occur (vertices,
  /// midpoints, cap centres). May be empty.
  virtual std::vector<Vec> critical_points() const { return {}; }

  /// An interior point.
  virtual Vec centroid() const = 0;
  /// The t > 0 with origin + t * dir on the boundary; origin interior, dir unit.
  virtual double ray_exit(const Vec& origin, const Vec& dir) const = 0;
  /// Euclidean distance from x to the boundary.
  virtual double distance_to_surface(const Vec& x) const = 0;
  /// Centre of point symmetry, if the body has one.
  virtual std::optional<Vec> symmetry_center() const { return std::nullopt; }
  /// Extra directions for the min-width search (facet normals and the like).
  virtual std::vector<Vec> width_candidates() const { return {}; }
  /// Length scale for tolerances (an upper bound on the circumradius).
  virtual double scale() const = 0;

  /// Relative tolerance used by on-surface tests.
  static constexpr double kSurfaceTol = 1e-9;
  bool on_surface(const Vec& x) const;
  /// Throws DomainError unless x is a point of the boundary.
  void require_on_surface(const Vec& x, std::string_view what = "point") const;
};

/// Angle between two nonzero vectors, accurate near 0 and pi.
double angle_between(const Vec& a, const Vec& b);

}  // namespace hyperarea::geometry
