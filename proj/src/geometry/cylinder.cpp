#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/numerics.hpp"
#include "hyperarea/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace hyperarea::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double omega(int n) { return static_cast<double>(std::exp(numerics::log_unit_ball_volume(n))); }

// Minimises a 2 pi-periodic function of D angles: grid scan, then compass
// search (axis and diagonal moves) from the best few grid points.
template <int D, class F>
double minimize_angles(F&& f, int grid) {
  using Point = std::array<double, D>;
  const double h0 = 2 * kPi / grid;
  int total = 1;
  for (int i = 0; i < D; ++i) total *= grid;

  constexpr int kSeeds = 4;
  std::array<std::pair<double, Point>, kSeeds> seeds;
  seeds.fill({kInf, Point{}});
  for (int index = 0; index < total; ++index) {
    Point p;
    int rest = index;
    for (int i = 0; i < D; ++i) {
      p[i] = (rest % grid) * h0;
      rest /= grid;
    }
    const double v = f(p);
    if (v < seeds[kSeeds - 1].first) {
      seeds[kSeeds - 1] = {v, p};
      std::sort(seeds.begin(), seeds.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }

  std::vector<Point> moves;
  for (int i = 0; i < D; ++i)
    for (int s : {-1, 1}) {
      Point m{};
      m[i] = s;
      moves.push_back(m);
      for (int j = i + 1; j < D; ++j)
        for (int t : {-1, 1}) {
          Point md{};
          md[i] = s;
          md[j] = t;
          moves.push_back(md);
        }
    }

  double best = kInf;
  for (auto [value, p] : seeds) {
    if (!std::isfinite(value)) continue;
    double step = h0;
    while (step > 1e-13) {
      bool improved = false;
      for (const Point& m : moves) {
        Point q = p;
        for (int i = 0; i < D; ++i) q[i] += step * m[i];
        const double v = f(q);
        if (v < value) {
          value = v;
          p = q;
          improved = true;
        }
      }
      if (!improved) step /= 2;
    }
    best = std::min(best, value);
  }
  return best;
}

}  // namespace

struct CylinderBody::Slice {
  enum Part { bottom, top, lateral } part;
  Eigen::Vector2d p;
  double z;
  double theta;
};

CylinderBody::CylinderBody(int n, double base_radius, double height, std::string id)
    : n_(n), r_(base_radius), h_(height), id_(std::move(id)) {
  if (n < 1) throw DomainError("cylinder surface dimension must be >= 1");
  if (!(base_radius > 0) || !(height > 0) || !std::isfinite(base_radius) || !std::isfinite(height))
    throw DomainError("cylinder radius and height must be positive");
}

CylinderBody CylinderBody::from_rho(int n, double rho, std::string id) {
  if (!(rho > 1)) throw DomainError("cylinder profile needs rho > 1");
  if (id.empty()) id = "cylinder_n" + std::to_string(n) + "_rho" + std::to_string(rho);
  return CylinderBody(n, (rho - 1) / (2 * rho), 1 / rho, std::move(id));
}

Vec CylinderBody::cap_center(bool top) const {
  Vec c = Vec::Zero(n_ + 1);
  c[n_] = top ? h_ / 2 : -h_ / 2;
  return c;
}

double CylinderBody::support(const Vec& u) const { return r_ * u.head(n_).norm() + h_ / 2 * std::fabs(u[n_]); }

double CylinderBody::boundary_area() const {
  const double w = omega(n_);
  return 2 * w * std::pow(r_, n_) + n_ * w * std::pow(r_, n_ - 1) * h_;
}

double CylinderBody::enclosed_volume() const { return omega(n_) * std::pow(r_, n_) * h_; }

double CylinderBody::slice_distance(const Slice& a, const Slice& b) const {
  const double r = r_, h = h_;
  auto rim = [r](double phi) { return Eigen::Vector2d(r * std::cos(phi), r * std::sin(phi)); };
  auto lateral = [r](double t1, double z1, double t2, double z2) {
    double d = std::fmod(std::fabs(t1 - t2), 2 * kPi);
    if (d > kPi) d = 2 * kPi - d;
    return std::hypot(r * d, z1 - z2);
  };
  auto chord = [r](double p1, double p2) { return 2 * r * std::fabs(std::sin((p1 - p2) / 2)); };

  if (a.part != Slice::lateral && a.part == b.part) return (a.p - b.p).norm();

  if (a.part != Slice::lateral && b.part != Slice::lateral) {
    const double za = a.z, zb = b.z;
    return minimize_angles<2>(
        [&](const std::array<double, 2>& t) {
          return (a.p - rim(t[0])).norm() + lateral(t[0], za, t[1], zb) + (rim(t[1]) - b.p).norm();
        },
        72);
  }

  if (a.part == Slice::lateral && b.part == Slice::lateral) {
    double best = lateral(a.theta, a.z, b.theta, b.z);
    for (double cap_z : {-h / 2, h / 2}) {
      const double lower = std::fabs(a.z - cap_z) + std::fabs(b.z - cap_z);
      if (lower >= best) continue;
      best = std::min(best, minimize_angles<2>(
                                [&](const std::array<double, 2>& t) {
                                  return lateral(a.theta, a.z, t[0], cap_z) + chord(t[0], t[1]) +
                                         lateral(t[1], cap_z, b.theta, b.z);
                                },
                                72));
    }
    return best;
  }

  const Slice& x = a.part == Slice::lateral ? a : b;
  const Slice& q = a.part == Slice::lateral ? b : a;
  const double near_z = q.z;
  const double far_z = -q.z;
  double best = minimize_angles<1>(
      [&](const std::array<double, 1>& t) { return lateral(x.theta, x.z, t[0], near_z) + (rim(t[0]) - q.p).norm(); },
      360);
  // detour over the opposite cap
  if (std::fabs(far_z - x.z) + h < best) {
    best = std::min(best, minimize_angles<3>(
                              [&](const std::array<double, 3>& t) {
                                return lateral(x.theta, x.z, t[0], far_z) + chord(t[0], t[1]) +
                                       lateral(t[1], far_z, t[2], near_z) + (rim(t[2]) - q.p).norm();
                              },
                              24));
  }
  return best;
}

Distance CylinderBody::intrinsic_distance(const Vec& x, const Vec& y) const {
  require_on_surface(x, "x");
  require_on_surface(y, "y");
  const double tol = kSurfaceTol * scale();

  if (n_ == 1) {
    const PolygonBoundary rect({{-r_, -h_ / 2}, {r_, -h_ / 2}, {r_, h_ / 2}, {-r_, h_ / 2}});
    return rect.intrinsic_distance(x, y);
  }

  auto cap_of = [&](const Vec& v) {
    if (v[n_] >= h_ / 2 - tol) return 1;
    if (v[n_] <= -h_ / 2 + tol) return -1;
    return 0;
  };
  const int cx = cap_of(x), cy = cap_of(y);
  // same cap: the straight segment lies in the flat cap
  if (cx != 0 && cx == cy) return {(x - y).norm(), BoundKind::exact};
  // opposite cap centres: any path needs r + h + r
  if (cx != 0 && cy == -cx && x.head(n_).norm() <= tol && y.head(n_).norm() <= tol)
    return {2 * r_ + h_, BoundKind::exact};

  // Coordinates in the 3-dimensional slice spanned by the axis and both points.
  const Vec px = x.head(n_), py = y.head(n_);
  Eigen::Vector2d sx, sy;
  if (n_ == 2) {
    sx = Eigen::Vector2d(px[0], px[1]);
    sy = Eigen::Vector2d(py[0], py[1]);
  } else {
    Vec e1 = Vec::Zero(n_), e2 = Vec::Zero(n_);
    if (px.norm() > tol) e1 = px.normalized();
    else if (py.norm() > tol) e1 = py.normalized();
    else e1[0] = 1;
    Vec rest = py - py.dot(e1) * e1;
    if (rest.norm() > tol) {
      e2 = rest.normalized();
    } else {
      // any unit vector orthogonal to e1
      int k = 0;
      for (int i = 1; i < n_; ++i)
        if (std::fabs(e1[i]) < std::fabs(e1[k])) k = i;
      e2[k] = 1;
      e2 = (e2 - e2.dot(e1) * e1).normalized();
    }
    sx = Eigen::Vector2d(px.dot(e1), px.dot(e2));
    sy = Eigen::Vector2d(py.dot(e1), py.dot(e2));
  }

  auto make = [&](const Eigen::Vector2d& p, double z, int cap) {
    Slice s;
    s.part = cap > 0 ? Slice::top : cap < 0 ? Slice::bottom : Slice::lateral;
    s.p = p;
    s.z = cap > 0 ? h_ / 2 : cap < 0 ? -h_ / 2 : z;
    s.theta = std::atan2(p.y(), p.x());
    return s;
  };
  const double value = slice_distance(make(sx, x[n_], cx), make(sy, y[n_], cy));
  return {value, n_ == 2 ? BoundKind::exact : BoundKind::upper_bound};
}

double CylinderBody::intrinsic_distance_lower(const Vec& x, const Vec& y) const {
  const Distance d = intrinsic_distance(x, y);
  return d.kind == BoundKind::exact ? d.value : (x - y).norm();
}

std::vector<Vec> CylinderBody::sample_boundary(std::uint64_t seed, int count) const {
  auto rng = random::substream(seed, "cylinder.sample");
  const double w = omega(n_);
  const double cap = w * std::pow(r_, n_);
  const double total = boundary_area();
  std::vector<Vec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Vec v(n_ + 1);
    const double u = random::uniform01(rng) * total;
    const Vec dir = random::uniform_direction(rng, n_);
    if (u < 2 * cap) {
      const double radius = r_ * std::pow(random::uniform01(rng), 1.0 / n_);
      v.head(n_) = radius * dir;
      v[n_] = u < cap ? -h_ / 2 : h_ / 2;
    } else {
      v.head(n_) = r_ * dir;
      v[n_] = (random::uniform01(rng) - 0.5) * h_;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> CylinderBody::critical_points() const {
  std::vector<Vec> out{cap_center(false), cap_center(true)};
  for (double z : {-h_ / 2, 0.0, h_ / 2})
    for (double s : {-1.0, 1.0}) {
      Vec v = Vec::Zero(n_ + 1);
      v[0] = s * r_;
      v[n_] = z;
      out.push_back(v);
    }
  return out;
}

double CylinderBody::ray_exit(const Vec& origin, const Vec& dir) const {
  const Vec po = origin.head(n_), pd = dir.head(n_);
  double t = kInf;
  const double a = pd.squaredNorm();
  if (a > 0) {
    const double b = po.dot(pd);
    const double c = po.squaredNorm() - r_ * r_;
    t = (-b + std::sqrt(std::max(0.0, b * b - a * c))) / a;
  }
  const double zd = dir[n_];
  if (zd > 0) t = std::min(t, (h_ / 2 - origin[n_]) / zd);
  if (zd < 0) t = std::min(t, (-h_ / 2 - origin[n_]) / zd);
  return t;
}

double CylinderBody::distance_to_surface(const Vec& x) const {
  const double dr = x.head(n_).norm() - r_;
  const double dz = std::fabs(x[n_]) - h_ / 2;
  if (dr <= 0 && dz <= 0) return -std::max(dr, dz);
  return std::hypot(std::max(dr, 0.0), std::max(dz, 0.0));
}

std::vector<Vec> CylinderBody::width_candidates() const {
  Vec axis = Vec::Zero(n_ + 1), across = Vec::Zero(n_ + 1);
  axis[n_] = 1;
  across[0] = 1;
  return {axis, across};
}

}  // namespace hyperarea::geometry
