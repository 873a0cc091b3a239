#pragma once

// Convex polytopes in R^3: hull construction, mensuration and Steiner-graph
// geodesics.

#include "hyperarea/geometry/body.hpp"

#include <Eigen/Dense>

#include <memory>
#include <mutex>

namespace hyperarea::geometry {

using Point3 = Eigen::Vector3d;

struct PolytopeFace {
  std::vector<int> vertices;  // counterclockwise seen from outside
  Point3 normal;              // outward unit normal
  double offset = 0;          // normal . z = offset on the face
  double area = 0;
  Point3 centroid;
};

struct PolytopeEdge {
  int a = 0, b = 0;          // vertex indices, a < b
  int left = 0, right = 0;   // adjacent faces
  double length = 0;
  double exterior_angle = 0;  // angle between the two outward normals
};

class Polytope3 final : public ConvexBody {
 public:
  /// Convex hull of `points`. Points strictly inside the hull are dropped;
  /// coplanar facets are merged. Throws DomainError for a degenerate point set.
  explicit Polytope3(const std::vector<Point3>& points, int subdivision = 8, std::string id = "polytope");

  static Polytope3 cube(double edge = 1, int subdivision = 8, std::string id = "cube");
  static Polytope3 regular_tetrahedron(double edge = 1, int subdivision = 8, std::string id = "tetrahedron");

  /// Same hull with a different Steiner subdivision m.
  Polytope3 with_subdivision(int subdivision) const;

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<PolytopeFace>& faces() const { return faces_; }
  const std::vector<PolytopeEdge>& edges() const { return edges_; }
  int subdivision() const { return subdivision_; }
  Vec face_center(int face) const;
  /// Faces whose closure contains x (empty when x is off the surface).
  std::vector<int> faces_containing(const Vec& x) const;

  /// (1/(4 pi)) sum over edges of length * exterior dihedral angle.
  double mean_width_edge_formula() const;
  /// Area of the orthogonal projection onto the plane normal to u.
  double projected_area(const Vec& u) const;

  std::string id() const override { return id_; }
  std::string type_name() const override { return "polytope"; }
  int ambient_dimension() const override { return 3; }
  double support(const Vec& u) const override;
  double boundary_area() const override { return area_; }
  double enclosed_volume() const override { return volume_; }
  /// Shortest path in the graph over vertices, m Steiner points per edge and
  /// all straight chords inside each face. Upper bound, non-increasing under
  /// refinement of the Steiner set.
  Distance intrinsic_distance(const Vec& x, const Vec& y) const override;
  /// Lower bound: edges are cut into m + 1 intervals, consecutive intervals
  /// on a common face are joined with their segment-segment distance.
  double intrinsic_distance_lower(const Vec& x, const Vec& y) const override;
  /// Same bound from a single-source search with kRefinedSubdivision points
  /// per edge. Tighter and slower; meant for a few selected pairs.
  double intrinsic_distance_lower_refined(const Vec& x, const Vec& y) const override;
  static constexpr int kRefinedSubdivision = 48;
  std::vector<Vec> sample_boundary(std::uint64_t seed, int count) const override;
  std::vector<Vec> critical_points() const override;
  Vec centroid() const override { return Vec(interior_); }
  double ray_exit(const Vec& origin, const Vec& dir) const override;
  double distance_to_surface(const Vec& x) const override;
  std::optional<Vec> symmetry_center() const override;
  std::vector<Vec> width_candidates() const override;
  double scale() const override { return scale_; }

 private:
  struct Graphs;
  struct FineGraph;
  const Graphs& graphs() const;

  std::vector<Point3> vertices_;
  std::vector<PolytopeFace> faces_;
  std::vector<PolytopeEdge> edges_;
  int subdivision_;
  std::string id_;
  double area_ = 0, volume_ = 0, scale_ = 0;
  Point3 interior_;

  mutable std::shared_ptr<std::once_flag> graphs_once_;
  mutable std::shared_ptr<Graphs> graphs_;
  mutable std::shared_ptr<std::once_flag> fine_once_;
  mutable std::shared_ptr<FineGraph> fine_;
};

enum class PolytopeShape { round, cigar, pancake };

/// Hull of `vertex_count` points on the unit sphere with radial perturbation,
/// stretched for cigar (x3 along x) and pancake (x0.2 along z). A degenerate
/// draw is replaced by the next substream.
Polytope3 random_polytope(std::uint64_t seed, int vertex_count, PolytopeShape shape = PolytopeShape::round,
                          int subdivision = 8, std::string id = "");

}  // namespace hyperarea::geometry
