#include "hyperarea/geometry/measures.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/numerics.hpp"
#include "hyperarea/parallel.hpp"
#include "hyperarea/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperarea::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal basis of the complement of unit u.
std::vector<Vec> tangent_basis(const Vec& u) {
  const int d = static_cast<int>(u.size());
  std::vector<Vec> basis;
  for (int i = 0; i < d && static_cast<int>(basis.size()) < d - 1; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = 1;
    e -= e.dot(u) * u;
    for (const Vec& b : basis) e -= e.dot(b) * b;
    if (e.norm() > 1e-6) basis.push_back(e.normalized());
  }
  return basis;
}

}  // namespace

std::vector<Vec> direction_grid(int dim, int count) {
  if (dim < 2 || count < 1) throw ConfigurationError("direction grid needs dim >= 2 and count >= 1");
  std::vector<Vec> out;
  out.reserve(count);
  if (dim == 2) {
    for (int k = 0; k < count; ++k) {
      const double a = 2 * kPi * k / count;
      out.emplace_back(Vec(Eigen::Vector2d(std::cos(a), std::sin(a))));
    }
  } else if (dim == 3) {
    const double golden = kPi * (3 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1 - (2.0 * k + 1) / count;
      const double r = std::sqrt(std::max(0.0, 1 - z * z));
      out.emplace_back(Vec(Eigen::Vector3d(r * std::cos(golden * k), r * std::sin(golden * k), z)));
    }
  } else {
    auto rng = random::substream(0, "direction_grid", static_cast<std::uint64_t>(dim));
    for (int k = 0; k < count; ++k) out.push_back(random::uniform_direction(rng, dim));
  }
  return out;
}

double width(const ConvexBody& body, const Vec& direction) {
  if (direction.size() != body.ambient_dimension()) throw DomainError("direction has the wrong dimension");
  const double norm = direction.norm();
  if (!(norm > 0) || !std::isfinite(norm)) throw DomainError("width direction must be nonzero");
  const Vec u = direction / norm;
  return body.support(u) + body.support(-u);
}

MinWidth min_width(const ConvexBody& body, int budget, int refinements) {
  if (budget < 1 || refinements < 0) throw ConfigurationError("min_width needs a positive budget");
  const int dim = body.ambient_dimension();
  std::vector<Vec> candidates = direction_grid(dim, budget);
  for (auto& c : body.width_candidates()) candidates.push_back(std::move(c));

  std::vector<double> values(candidates.size());
  parallel::parallel_for(candidates.size(), [&](size_t i) { values[i] = width(body, candidates[i]); });
  const size_t best_i = static_cast<size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  MinWidth result{values[best_i], candidates[best_i].normalized(), BoundKind::upper_bound};

  // pattern search on the sphere around the best direction
  double step = std::pow(4 * kPi / budget, 1.0 / (dim - 1));
  for (int round = 0; round < refinements; ++round) {
    bool improved = false;
    for (const Vec& t : tangent_basis(result.direction))
      for (double s : {-1.0, 1.0}) {
        const Vec u = (result.direction + s * step * t).normalized();
        const double w = width(body, u);
        if (w < result.value) {
          result.value = w;
          result.direction = u;
          improved = true;
        }
      }
    if (!improved) step /= 2;
  }
  return result;
}

std::string_view to_string(MeanWidthMethod method) {
  switch (method) {
    case MeanWidthMethod::monte_carlo: return "monte_carlo";
    case MeanWidthMethod::polytope_edge_formula: return "polytope_edge_formula";
    case MeanWidthMethod::crofton_curve: return "crofton_curve";
  }
  return "monte_carlo";
}

MeanWidthMethod parse_mean_width_method(std::string_view name) {
  for (auto m : {MeanWidthMethod::monte_carlo, MeanWidthMethod::polytope_edge_formula, MeanWidthMethod::crofton_curve})
    if (to_string(m) == name) return m;
  throw ConfigurationError("unknown mean width method '" + std::string(name) + "'");
}

MeanWidth mean_width(const ConvexBody& body, MeanWidthMethod method, std::uint64_t seed, long long samples) {
  MeanWidth out;
  out.method = method;
  switch (method) {
    case MeanWidthMethod::polytope_edge_formula: {
      const auto* p = dynamic_cast<const Polytope3*>(&body);
      if (p == nullptr) throw ConfigurationError("polytope_edge_formula needs a polytope, not " + body.type_name());
      out.value = p->mean_width_edge_formula();
      return out;
    }
    case MeanWidthMethod::crofton_curve: {
      const auto* p = dynamic_cast<const PolygonBoundary*>(&body);
      if (p == nullptr) throw ConfigurationError("crofton_curve needs a polygon, not " + body.type_name());
      out.value = p->perimeter() / kPi;
      return out;
    }
    case MeanWidthMethod::monte_carlo:
      break;
  }
  if (samples < 2) throw ConfigurationError("Monte Carlo mean width needs at least 2 samples");
  constexpr long long kChunk = 8192;
  const long long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> sums(chunks), squares(chunks);
  const int dim = body.ambient_dimension();
  parallel::parallel_for(static_cast<size_t>(chunks), [&](size_t c) {
    auto rng = random::substream(seed, "mean_width", c);
    const long long count = std::min(kChunk, samples - static_cast<long long>(c) * kChunk);
    double s = 0, q = 0;
    for (long long i = 0; i < count; ++i) {
      const Vec u = random::uniform_direction(rng, dim);
      const double w = body.support(u) + body.support(-u);
      s += w;
      q += w * w;
    }
    sums[c] = s;
    squares[c] = q;
  });
  double s = 0, q = 0;
  for (long long c = 0; c < chunks; ++c) {
    s += sums[c];
    q += squares[c];
  }
  const double n = static_cast<double>(samples);
  out.value = s / n;
  const double variance = std::max(0.0, (q - s * s / n) / (n - 1));
  out.standard_error = std::sqrt(variance / n);
  out.samples = samples;
  return out;
}

ChakerianCheck chakerian_check(const Polytope3& body, const Vec& direction) {
  if (!(direction.norm() > 0)) throw DomainError("direction must be nonzero");
  const Vec u = direction.normalized();
  const Vec c = body.centroid();
  ChakerianCheck out;
  out.volume = body.enclosed_volume();
  out.segment = body.ray_exit(c, u) + body.ray_exit(c, -u);
  out.projected_area = body.projected_area(u);
  out.rhs = out.segment * out.projected_area / 3;
  out.margin = out.volume - out.rhs;
  return out;
}

double isoperimetric_area_bound(const ConvexBody& body) {
  const int n = body.surface_dimension();
  const long double log_ratio = std::log(static_cast<long double>(body.enclosed_volume())) - numerics::log_unit_ball_volume(n + 1);
  return static_cast<double>(std::exp(numerics::log_unit_sphere_area(n) + log_ratio * n / (n + 1)));
}

}  // namespace hyperarea::geometry
