#pragma once

// Analytic bodies: round sphere, right circular cylinder, convex polygon.

#include "hyperarea/geometry/body.hpp"

namespace hyperarea::geometry {

class SphereBody final : public ConvexBody {
 public:
  /// Sphere of the given radius in R^{ambient_dimension}.
  SphereBody(int ambient_dimension, double radius = 1, std::optional<Vec> center = std::nullopt,
             std::string id = "sphere");

  double radius() const { return radius_; }
  const Vec& center() const { return center_; }

  std::string id() const override { return id_; }
  std::string type_name() const override { return "sphere"; }
  int ambient_dimension() const override { return static_cast<int>(center_.size()); }
  double support(const Vec& u) const override;
  double boundary_area() const override;
  double enclosed_volume() const override;
  Distance intrinsic_distance(const Vec& x, const Vec& y) const override;
  std::vector<Vec> sample_boundary(std::uint64_t seed, int count) const override;
  Vec centroid() const override { return center_; }
  double ray_exit(const Vec& origin, const Vec& dir) const override;
  double distance_to_surface(const Vec& x) const override;
  std::optional<Vec> symmetry_center() const override { return center_; }
  double scale() const override { return radius_ + center_.norm(); }

 private:
  double radius_;
  Vec center_;
  std::string id_;
};

/// B^n(r) x [-h/2, h/2] in R^{n+1}, axis along the last coordinate, centred at
/// the origin. Surface dimension n >= 1.
class CylinderBody final : public ConvexBody {
 public:
  CylinderBody(int n, double base_radius, double height, std::string id = "cylinder");
  /// r = (rho-1)/(2 rho), h = 1/rho: cap centres at intrinsic distance 1.
  static CylinderBody from_rho(int n, double rho, std::string id = "");

  int n() const { return n_; }
  double base_radius() const { return r_; }
  double height() const { return h_; }
  Vec cap_center(bool top) const;

  std::string id() const override { return id_; }
  std::string type_name() const override { return "cylinder"; }
  int ambient_dimension() const override { return n_ + 1; }
  double support(const Vec& u) const override;
  double boundary_area() const override;
  double enclosed_volume() const override;
  /// Exact for n = 2 and for cap centres in any dimension. For n > 2 the
  /// distance is computed in the 3-dimensional slice through the axis and both
  /// points and tagged as an upper bound.
  Distance intrinsic_distance(const Vec& x, const Vec& y) const override;
  double intrinsic_distance_lower(const Vec& x, const Vec& y) const override;
  std::vector<Vec> sample_boundary(std::uint64_t seed, int count) const override;
  std::vector<Vec> critical_points() const override;
  Vec centroid() const override { return Vec::Zero(n_ + 1); }
  double ray_exit(const Vec& origin, const Vec& dir) const override;
  double distance_to_surface(const Vec& x) const override;
  std::optional<Vec> symmetry_center() const override { return centroid(); }
  std::vector<Vec> width_candidates() const override;
  double scale() const override { return r_ + h_; }

 private:
  struct Slice;
  double slice_distance(const Slice& a, const Slice& b) const;

  int n_;
  double r_, h_;
  std::string id_;
};

/// Boundary of a convex polygon with counterclockwise vertices. Intrinsic
/// distance is the shorter boundary arc.
class PolygonBoundary final : public ConvexBody {
 public:
  explicit PolygonBoundary(std::vector<Eigen::Vector2d> vertices, std::string id = "polygon");
  static PolygonBoundary equilateral_triangle(double side = 1, std::string id = "triangle");
  static PolygonBoundary regular(int sides, double perimeter, std::string id = "");

  const std::vector<Eigen::Vector2d>& vertices() const { return vertices_; }
  double perimeter() const { return perimeter_; }
  /// Arc-length parameter in [0, perimeter) of a boundary point, measured
  /// counterclockwise from vertex 0.
  double arc_parameter(const Vec& x) const;
  Vec point_at(double s) const;

  std::string id() const override { return id_; }
  std::string type_name() const override { return "polygon"; }
  int ambient_dimension() const override { return 2; }
  double support(const Vec& u) const override;
  double boundary_area() const override { return perimeter_; }
  double enclosed_volume() const override { return area_; }
  Distance intrinsic_distance(const Vec& x, const Vec& y) const override;
  std::vector<Vec> sample_boundary(std::uint64_t seed, int count) const override;
  std::vector<Vec> critical_points() const override;
  Vec centroid() const override;
  double ray_exit(const Vec& origin, const Vec& dir) const override;
  double distance_to_surface(const Vec& x) const override;
  std::optional<Vec> symmetry_center() const override;
  std::vector<Vec> width_candidates() const override;
  double scale() const override { return scale_; }

 private:
  std::vector<Eigen::Vector2d> vertices_;
  std::vector<double> cumulative_;  // arc length at each vertex
  double perimeter_ = 0, area_ = 0, scale_ = 0;
  std::string id_;
};

}  // namespace hyperarea::geometry
