#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/numerics.hpp"
#include "hyperarea/random.hpp"

#include <cmath>

namespace hyperarea::geometry {

SphereBody::SphereBody(int ambient_dimension, double radius, std::optional<Vec> center, std::string id)
    : radius_(radius), center_(center.value_or(Vec::Zero(ambient_dimension))), id_(std::move(id)) {
  if (ambient_dimension < 2) throw DomainError("sphere needs ambient dimension >= 2");
  if (!(radius > 0) || !std::isfinite(radius)) throw DomainError("sphere radius must be positive");
  if (center_.size() != ambient_dimension) throw DomainError("sphere centre has the wrong dimension");
}

double SphereBody::support(const Vec& u) const { return center_.dot(u) + radius_ * u.norm(); }

double SphereBody::boundary_area() const {
  const int n = ambient_dimension() - 1;
  return static_cast<double>(std::exp(numerics::log_unit_sphere_area(n) + n * std::log(static_cast<long double>(radius_))));
}

double SphereBody::enclosed_volume() const {
  const int d = ambient_dimension();
  return static_cast<double>(std::exp(numerics::log_unit_ball_volume(d) + d * std::log(static_cast<long double>(radius_))));
}

Distance SphereBody::intrinsic_distance(const Vec& x, const Vec& y) const {
  require_on_surface(x, "x");
  require_on_surface(y, "y");
  return {radius_ * angle_between(x - center_, y - center_), BoundKind::exact};
}

std::vector<Vec> SphereBody::sample_boundary(std::uint64_t seed, int count) const {
  auto rng = random::substream(seed, "sphere.sample");
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(center_ + radius_ * random::uniform_direction(rng, ambient_dimension()));
  return out;
}

double SphereBody::ray_exit(const Vec& origin, const Vec& dir) const {
  const Vec o = origin - center_;
  const double b = o.dot(dir);
  const double c = o.squaredNorm() - radius_ * radius_;
  return -b + std::sqrt(b * b - c);
}

double SphereBody::distance_to_surface(const Vec& x) const { return std::fabs((x - center_).norm() - radius_); }

}  // namespace hyperarea::geometry
