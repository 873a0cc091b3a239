#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperarea::geometry {

namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b, double* t_out) {
  const Eigen::Vector2d e = b - a;
  const double t = std::clamp((p - a).dot(e) / e.squaredNorm(), 0.0, 1.0);
  if (t_out != nullptr) *t_out = t;
  return (p - (a + t * e)).norm();
}

}  // namespace

PolygonBoundary::PolygonBoundary(std::vector<Eigen::Vector2d> vertices, std::string id)
    : vertices_(std::move(vertices)), id_(std::move(id)) {
  const size_t k = vertices_.size();
  if (k < 3) throw DomainError("polygon needs at least 3 vertices");
  cumulative_.resize(k);
  for (size_t i = 0; i < k; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % k];
    const auto& c = vertices_[(i + 2) % k];
    if (!(cross(b - a, c - b) > 0)) throw DomainError("polygon vertices must be strictly convex and counterclockwise");
    cumulative_[i] = perimeter_;
    perimeter_ += (b - a).norm();
    area_ += cross(a, b) / 2;
    scale_ = std::max(scale_, a.norm());
  }
}

PolygonBoundary PolygonBoundary::equilateral_triangle(double side, std::string id) {
  return PolygonBoundary({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}}, std::move(id));
}

PolygonBoundary PolygonBoundary::regular(int sides, double perimeter, std::string id) {
  if (sides < 3) throw DomainError("regular polygon needs at least 3 sides");
  const double circumradius = perimeter / sides / (2 * std::sin(std::numbers::pi / sides));
  std::vector<Eigen::Vector2d> v;
  for (int j = 0; j < sides; ++j) {
    const double a = 2 * std::numbers::pi * j / sides;
    v.emplace_back(circumradius * std::cos(a), circumradius * std::sin(a));
  }
  if (id.empty()) id = "regular" + std::to_string(sides);
  return PolygonBoundary(std::move(v), std::move(id));
}

double PolygonBoundary::arc_parameter(const Vec& x) const {
  require_on_surface(x);
  const Eigen::Vector2d p(x[0], x[1]);
  const size_t k = vertices_.size();
  size_t best = 0;
  double best_t = 0, best_d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < k; ++i) {
    double t = 0;
    const double d = segment_distance(p, vertices_[i], vertices_[(i + 1) % k], &t);
    if (d < best_d) {
      best_d = d;
      best = i;
      best_t = t;
    }
  }
  const double len = (vertices_[(best + 1) % k] - vertices_[best]).norm();
  const double s = cumulative_[best] + best_t * len;
  return s >= perimeter_ ? s - perimeter_ : s;
}

Vec PolygonBoundary::point_at(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0) s += perimeter_;
  const size_t k = vertices_.size();
  const size_t i = static_cast<size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), s) - cumulative_.begin()) - 1;
  const auto& a = vertices_[i];
  const auto& b = vertices_[(i + 1) % k];
  const double t = (s - cumulative_[i]) / (b - a).norm();
  const Eigen::Vector2d p = a + t * (b - a);
  return Vec(p);
}

double PolygonBoundary::support(const Vec& u) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, v.x() * u[0] + v.y() * u[1]);
  return best;
}

Distance PolygonBoundary::intrinsic_distance(const Vec& x, const Vec& y) const {
  const double d = std::fabs(arc_parameter(x) - arc_parameter(y));
  return {std::min(d, perimeter_ - d), BoundKind::exact};
}

std::vector<Vec> PolygonBoundary::sample_boundary(std::uint64_t seed, int count) const {
  auto rng = random::substream(seed, "polygon.sample");
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(point_at(random::uniform01(rng) * perimeter_));
  return out;
}

std::vector<Vec> PolygonBoundary::critical_points() const {
  std::vector<Vec> out;
  const size_t k = vertices_.size();
  for (size_t i = 0; i < k; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % k];
    for (double t : {0.0, 0.25, 0.5, 0.75}) out.emplace_back(Vec(Eigen::Vector2d(a + t * (b - a))));
  }
  return out;
}

Vec PolygonBoundary::centroid() const {
  Eigen::Vector2d c(0, 0);
  const size_t k = vertices_.size();
  for (size_t i = 0; i < k; ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % k];
    c += (a + b) * cross(a, b);
  }
  return Vec(Eigen::Vector2d(c / (6 * area_)));
}

double PolygonBoundary::ray_exit(const Vec& origin, const Vec& dir) const {
  const size_t k = vertices_.size();
  const Eigen::Vector2d o(origin[0], origin[1]);
  const Eigen::Vector2d d(dir[0], dir[1]);
  double t = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < k; ++i) {
    const Eigen::Vector2d e = vertices_[(i + 1) % k] - vertices_[i];
    const Eigen::Vector2d normal(e.y(), -e.x());
    const double denom = normal.dot(d);
    if (denom > 0) t = std::min(t, normal.dot(vertices_[i] - o) / denom);
  }
  return t;
}

double PolygonBoundary::distance_to_surface(const Vec& x) const {
  const Eigen::Vector2d p(x[0], x[1]);
  double best = std::numeric_limits<double>::infinity();
  const size_t k = vertices_.size();
  for (size_t i = 0; i < k; ++i) best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % k], nullptr));
  return best;
}

std::optional<Vec> PolygonBoundary::symmetry_center() const {
  const size_t k = vertices_.size();
  if (k % 2 != 0) return std::nullopt;
  const Eigen::Vector2d c = (vertices_[0] + vertices_[k / 2]) / 2;
  for (size_t i = 1; i < k / 2; ++i)
    if (((vertices_[i] + vertices_[i + k / 2]) / 2 - c).norm() > kSurfaceTol * scale_) return std::nullopt;
  return Vec(c);
}

std::vector<Vec> PolygonBoundary::width_candidates() const {
  std::vector<Vec> out;
  const size_t k = vertices_.size();
  for (size_t i = 0; i < k; ++i) {
    const Eigen::Vector2d e = vertices_[(i + 1) % k] - vertices_[i];
    out.emplace_back(Vec(Eigen::Vector2d(Eigen::Vector2d(e.y(), -e.x()).normalized())));
  }
  return out;
}

}  // namespace hyperarea::geometry
