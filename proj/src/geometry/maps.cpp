#include "hyperarea/geometry/maps.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/geometry/measures.hpp"
#include "hyperarea/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperarea::geometry {

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::central_point: return "central_point";
    case MapKind::euclidean_antipode: return "euclidean_antipode";
    case MapKind::half_perimeter: return "half_perimeter";
    case MapKind::custom: return "custom";
  }
  return "custom";
}

MapKind parse_map_kind(std::string_view name) {
  for (MapKind k : {MapKind::central_point, MapKind::euclidean_antipode, MapKind::half_perimeter, MapKind::custom})
    if (to_string(k) == name) return k;
  throw ConfigurationError("unknown map kind '" + std::string(name) + "'");
}

DisplacementMap DisplacementMap::central_point(std::optional<Vec> p) {
  DisplacementMap m;
  m.kind_ = MapKind::central_point;
  m.id_ = "central_point";
  m.point_ = std::move(p);
  return m;
}

DisplacementMap DisplacementMap::euclidean_antipode() {
  DisplacementMap m;
  m.kind_ = MapKind::euclidean_antipode;
  m.id_ = "euclidean_antipode";
  return m;
}

DisplacementMap DisplacementMap::half_perimeter() {
  DisplacementMap m;
  m.kind_ = MapKind::half_perimeter;
  m.id_ = "half_perimeter";
  return m;
}

DisplacementMap DisplacementMap::custom(std::string id, Function f, std::vector<Vec> critical) {
  DisplacementMap m;
  m.kind_ = MapKind::custom;
  m.id_ = std::move(id);
  m.custom_ = std::move(f);
  m.custom_critical_ = std::move(critical);
  return m;
}

void DisplacementMap::check_applicable(const ConvexBody& body) const {
  switch (kind_) {
    case MapKind::central_point:
      if (point_) {
        if (point_->size() != body.ambient_dimension())
          throw ConfigurationError("central point has the wrong dimension for " + body.id());
        // strictly interior: every support value exceeds the point's projection
        for (const Vec& u : direction_grid(body.ambient_dimension(), 64))
          if (!(body.support(u) > point_->dot(u))) throw ConfigurationError("central point is not interior to " + body.id());
      }
      return;
    case MapKind::euclidean_antipode:
      if (!body.symmetry_center()) throw ConfigurationError("euclidean_antipode needs a centrally symmetric body, " + body.id() + " is not");
      return;
    case MapKind::half_perimeter:
      if (dynamic_cast<const PolygonBoundary*>(&body) == nullptr)
        throw ConfigurationError("half_perimeter applies to polygons only, not " + body.id());
      return;
    case MapKind::custom:
      if (!custom_) throw ConfigurationError("custom map without a function");
      return;
  }
}

Vec DisplacementMap::operator()(const ConvexBody& body, const Vec& x) const {
  switch (kind_) {
    case MapKind::central_point: {
      const Vec p = point_ ? *point_ : body.centroid();
      const Vec dir = (p - x).normalized();
      return p + body.ray_exit(p, dir) * dir;
    }
    case MapKind::euclidean_antipode: {
      const auto c = body.symmetry_center();
      if (!c) throw ConfigurationError("euclidean_antipode needs a centrally symmetric body");
      return 2 * *c - x;
    }
    case MapKind::half_perimeter: {
      const auto* polygon = dynamic_cast<const PolygonBoundary*>(&body);
      if (polygon == nullptr) throw ConfigurationError("half_perimeter applies to polygons only");
      return polygon->point_at(polygon->arc_parameter(x) + polygon->perimeter() / 2);
    }
    case MapKind::custom:
      return custom_(body, x);
  }
  throw ConfigurationError("unknown map kind");
}

std::vector<Vec> DisplacementMap::critical_points(const ConvexBody& body) const {
  if (kind_ == MapKind::custom) return custom_critical_;
  if (kind_ == MapKind::half_perimeter) {
    // quarter points of every edge; on the equilateral triangle the ratio 2
    // is attained at distance L/4 from a vertex
    std::vector<Vec> out;
    const auto* polygon = dynamic_cast<const PolygonBoundary*>(&body);
    if (polygon == nullptr) return out;
    const auto& v = polygon->vertices();
    for (size_t i = 0; i < v.size(); ++i) {
      const Eigen::Vector2d a = v[i], b = v[(i + 1) % v.size()];
      for (double t : {0.25, 0.75}) out.emplace_back(Vec(Eigen::Vector2d(a + t * (b - a))));
    }
    return out;
  }
  return {};
}

MapDisplacementStats displacement_stats(const ConvexBody& body, const DisplacementMap& map, int samples,
                                        std::uint64_t seed) {
  if (samples < 0) throw ConfigurationError("sample count must be >= 0");
  map.check_applicable(body);
  std::vector<Vec> points = body.sample_boundary(seed, samples);
  for (auto& c : body.critical_points()) points.push_back(std::move(c));
  for (auto& c : map.critical_points(body))
    if (body.on_surface(c)) points.push_back(std::move(c));

  struct Eval {
    double upper = 0, lower = 0, chord = 0;
    BoundKind kind = BoundKind::exact;
  };
  std::vector<Eval> evals(points.size());
  const double fixed_tol = 1e-12 * body.scale();
  constexpr size_t kChunk = 256;
  const size_t chunks = (points.size() + kChunk - 1) / kChunk;
  parallel::parallel_for(chunks, [&](size_t c) {
    const size_t end = std::min(points.size(), (c + 1) * kChunk);
    for (size_t i = c * kChunk; i < end; ++i) {
      const Vec& x = points[i];
      const Vec y = map(body, x);
      Eval e;
      e.chord = (y - x).norm();
      if (!(e.chord > fixed_tol))
        throw MapInvalidError("map " + map.id() + " has a fixed point on " + body.id() + " (|a(x) - x| = " +
                              std::to_string(e.chord) + ")");
      const Distance d = body.intrinsic_distance(x, y);
      e.upper = d.value;
      e.kind = d.kind;
      e.lower = d.kind == BoundKind::exact ? d.value : body.intrinsic_distance_lower(x, y);
      evals[i] = e;
    }
  });

  // Tighten the lower bound where it can set rho_hat: the points with the
  // largest upper-bound ratio. A max over a subset of valid lower ratios still
  // cannot exceed rho.
  std::vector<size_t> order;
  for (size_t i = 0; i < points.size(); ++i)
    if (evals[i].kind == BoundKind::upper_bound) order.push_back(i);
  const size_t refine = std::min<size_t>(order.size(), kRefinedPoints);
  std::partial_sort(order.begin(), order.begin() + refine, order.end(), [&](size_t a, size_t b) {
    const double ra = evals[a].upper / evals[a].chord, rb = evals[b].upper / evals[b].chord;
    return ra != rb ? ra > rb : a < b;
  });
  parallel::parallel_for(refine, [&](size_t k) {
    const size_t i = order[k];
    evals[i].lower = std::max(evals[i].lower, body.intrinsic_distance_lower_refined(points[i], map(body, points[i])));
  });

  MapDisplacementStats stats;
  stats.samples = static_cast<int>(points.size());
  stats.random_samples = samples;
  stats.seed = seed;
  stats.mu_hat = std::numeric_limits<double>::infinity();
  stats.rho_hat = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    const Eval& e = evals[i];
    if (e.kind == BoundKind::upper_bound) stats.distance_kind = BoundKind::upper_bound;
    if (e.upper < stats.mu_hat) {
      stats.mu_hat = e.upper;
      stats.argmin_point = points[i];
    }
    const double ratio = std::max(e.lower, e.chord) / e.chord;
    if (ratio > stats.rho_hat) {
      stats.rho_hat = ratio;
      stats.argmax_point = points[i];
    }
  }
  return stats;
}

CoverageReport chordal_gauss_coverage(const ConvexBody& body, const DisplacementMap& map, int direction_grid_size,
                                      int samples, std::uint64_t seed) {
  if (direction_grid_size < 1 || samples < 1) throw ConfigurationError("coverage needs a grid and samples");
  map.check_applicable(body);
  const std::vector<Vec> points = body.sample_boundary(seed, samples);
  std::vector<Vec> psi(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    const Vec d = map(body, points[i]) - points[i];
    if (!(d.norm() > 1e-12 * body.scale())) throw MapInvalidError("map " + map.id() + " has a fixed point on " + body.id());
    psi[i] = d.normalized();
  }

  const std::vector<Vec> grid = direction_grid(body.ambient_dimension(), direction_grid_size);
  std::vector<double> gaps(grid.size());
  parallel::parallel_for(grid.size(), [&](size_t g) {
    double best = -2;
    for (const Vec& v : psi) best = std::max(best, grid[g].dot(v));
    gaps[g] = std::acos(std::clamp(best, -1.0, 1.0));
  });

  CoverageReport report;
  report.grid_size = static_cast<int>(grid.size());
  report.samples = samples;
  for (double g : gaps) {
    report.max_gap = std::max(report.max_gap, g);
    report.mean_gap += g;
  }
  report.mean_gap /= static_cast<double>(gaps.size());

  if (const auto* polygon = dynamic_cast<const PolygonBoundary*>(&body)) {
    // degree of x -> Psi(x) along the counterclockwise boundary
    std::vector<std::pair<double, double>> by_arc;
    for (size_t i = 0; i < points.size(); ++i)
      by_arc.push_back({polygon->arc_parameter(points[i]), std::atan2(psi[i][1], psi[i][0])});
    std::sort(by_arc.begin(), by_arc.end());
    double total = 0;
    for (size_t i = 0; i < by_arc.size(); ++i) {
      double step = by_arc[(i + 1) % by_arc.size()].second - by_arc[i].second;
      step = std::remainder(step, 2 * std::numbers::pi);
      total += step;
    }
    report.winding_number = static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
  }
  return report;
}

}  // namespace hyperarea::geometry
