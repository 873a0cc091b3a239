#include "hyperarea/geometry/body.hpp"

#include "hyperarea/errors.hpp"

#include <cmath>
#include <string>

namespace hyperarea::geometry {

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::exact ? "exact" : "upper_bound";
}

double ConvexBody::intrinsic_distance_lower(const Vec& x, const Vec& y) const {
  const Distance d = intrinsic_distance(x, y);
  if (d.kind == BoundKind::exact) return d.value;
  return (x - y).norm();
}

bool ConvexBody::on_surface(const Vec& x) const {
  if (x.size() != ambient_dimension() || !x.allFinite()) return false;
  return distance_to_surface(x) <= kSurfaceTol * scale();
}

void ConvexBody::require_on_surface(const Vec& x, std::string_view what) const {
  if (x.size() != ambient_dimension())
    throw DomainError(std::string(what) + " has dimension " + std::to_string(x.size()) + ", body " + id() +
                      " lives in R^" + std::to_string(ambient_dimension()));
  if (!on_surface(x))
    throw DomainError(std::string(what) + " is not on the boundary of " + id() + " (distance " +
                      std::to_string(distance_to_surface(x)) + ")");
}

double angle_between(const Vec& a, const Vec& b) {
  const Vec ua = a.normalized();
  const Vec ub = b.normalized();
  return 2 * std::atan2((ua - ub).norm(), (ua + ub).norm());
}

}  // namespace hyperarea::geometry
