#pragma once

// Fixed-point-free self-maps of a boundary and their sampled displacement.

#include "hyperarea/geometry/body.hpp"

#include <functional>

namespace hyperarea::geometry {

enum class MapKind { central_point, euclidean_antipode, half_perimeter, custom };
std::string_view to_string(MapKind kind);
/// Throws ConfigurationError on an unknown name.
MapKind parse_map_kind(std::string_view name);

class DisplacementMap {
 public:
  using Function = std::function<Vec(const ConvexBody&, const Vec&)>;

  /// x -> the other intersection of the line through x and p with the
  /// boundary. Without p the body's centroid is used.
  static DisplacementMap central_point(std::optional<Vec> p = std::nullopt);
  /// x -> 2c - x for a centrally symmetric body with centre c.
  static DisplacementMap euclidean_antipode();
  /// x -> the point half the perimeter further along a polygon.
  static DisplacementMap half_perimeter();
  static DisplacementMap custom(std::string id, Function f, std::vector<Vec> critical = {});

  MapKind kind() const { return kind_; }
  std::string id() const { return id_; }
  /// Throws ConfigurationError when the map does not apply to the body.
  Vec operator()(const ConvexBody& body, const Vec& x) const;
  /// Throws ConfigurationError when the map does not apply to the body.
  void check_applicable(const ConvexBody& body) const;
  /// Map-specific points where extremes are known (e.g. quarter-edge points).
  std::vector<Vec> critical_points(const ConvexBody& body) const;
  /// All built-in kinds are involutions.
  bool is_involution() const { return kind_ != MapKind::custom; }

 private:
  MapKind kind_ = MapKind::custom;
  std::string id_;
  std::optional<Vec> point_;
  Function custom_;
  std::vector<Vec> custom_critical_;
};

struct MapDisplacementStats {
  double mu_hat = 0;   // min d_M(x, a(x)); over-estimates mu
  double rho_hat = 0;  // max d_M / |a(x) - x| with lower-bound d_M; under-estimates rho
  Vec argmin_point, argmax_point;
  int samples = 0;       // points evaluated, critical points included
  int random_samples = 0;
  std::uint64_t seed = 0;
  BoundKind distance_kind = BoundKind::exact;  // kind of the d_M values behind mu_hat
  std::string mu_orientation = "over_estimate";
  std::string rho_orientation = "under_estimate";
};

/// Points whose lower-bound distance is recomputed with the refined bound.
inline constexpr int kRefinedPoints = 16;

/// Throws MapInvalidError when some sampled x has |a(x) - x| <= 1e-12 * scale.
MapDisplacementStats displacement_stats(const ConvexBody& body, const DisplacementMap& map, int samples,
                                        std::uint64_t seed);

struct CoverageReport {
  int grid_size = 0;
  int samples = 0;
  double max_gap = 0;   // radians
  double mean_gap = 0;  // radians
  std::optional<int> winding_number;  // planar curves only
};

/// Angular distance from each grid direction to the nearest sampled value of
/// the chordal Gauss map (a(x) - x)/|a(x) - x|. The grid is quasi-uniform with
/// `direction_grid` points.
CoverageReport chordal_gauss_coverage(const ConvexBody& body, const DisplacementMap& map, int direction_grid,
                                      int samples, std::uint64_t seed);

}  // namespace hyperarea::geometry
