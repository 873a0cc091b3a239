#include "hyperarea/verify.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/geometry/measures.hpp"
#include "hyperarea/random.hpp"

#include <cmath>
#include <numbers>

namespace hyperarea::verify {

namespace {

using constants::Extended;
using geometry::BoundKind;
using table::format_number;

constexpr double kPi = std::numbers::pi;

void param(VerificationRecord& r, std::string key, double value) { r.params.emplace_back(std::move(key), format_number(value)); }
void param(VerificationRecord& r, std::string key, std::int64_t value) {
  r.params.emplace_back(std::move(key), std::to_string(value));
}
void param(VerificationRecord& r, std::string key, std::string value) { r.params.emplace_back(std::move(key), std::move(value)); }

double decode(Extended log_value) { return static_cast<double>(std::exp(log_value)); }

int require_surface_dimension(const ConvexBody& body, int minimum, std::string_view what) {
  const int n = body.surface_dimension();
  if (n < minimum)
    throw DomainError(std::string(what) + " needs surface dimension >= " + std::to_string(minimum) + ", " + body.id() +
                      " has " + std::to_string(n));
  return n;
}

// Bezdek's constant exists from d = 3; the planar Pal constant is sharp.
PalKind effective_kind(int d, PalKind kind) { return d < 3 ? PalKind::pal_firey : kind; }

VerificationRecord base(std::string theorem, const ConvexBody& body, const DisplacementMap* map, std::uint64_t seed) {
  VerificationRecord r;
  r.theorem_id = std::move(theorem);
  r.body_id = body.id();
  if (map) r.map_id = map->id();
  r.seed = seed;
  return r;
}

std::string mu_note(const MapDisplacementStats& s) {
  return std::string("mu_hat is a minimum over sampled points of ") +
         (s.distance_kind == BoundKind::exact ? "exact" : "upper-bound") + " distances, so mu_hat >= mu (" +
         s.mu_orientation + ")";
}

std::string rho_note(const MapDisplacementStats& s) {
  return "rho_hat is a maximum over sampled points of lower-bound distance ratios, so rho_hat <= rho (" +
         s.rho_orientation + ")";
}

void stats_params(VerificationRecord& r, const MapDisplacementStats& s) {
  param(r, "mu_hat", s.mu_hat);
  param(r, "rho_hat", s.rho_hat);
  param(r, "samples", static_cast<std::int64_t>(s.samples));
  param(r, "distance_kind", std::string(to_string(s.distance_kind)));
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::strict: return "strict";
    case Relation::non_strict: return "non_strict";
    case Relation::equality: return "equality";
  }
  return "strict";
}

Relation parse_relation(std::string_view name) {
  for (Relation r : {Relation::strict, Relation::non_strict, Relation::equality})
    if (to_string(r) == name) return r;
  throw ConfigurationError("unknown relation '" + std::string(name) + "'");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::advisory: return "advisory";
    case Status::not_applicable: return "not_applicable";
    case Status::error: return "error";
  }
  return "error";
}

Status parse_status(std::string_view name) {
  for (Status s : {Status::pass, Status::fail, Status::advisory, Status::not_applicable, Status::error})
    if (to_string(s) == name) return s;
  throw ConfigurationError("unknown status '" + std::string(name) + "'");
}

void settle(VerificationRecord& r) {
  r.margin = r.lhs - r.rhs;
  switch (r.relation) {
    case Relation::strict: r.pass = r.margin > 0; break;
    case Relation::non_strict: r.pass = r.margin >= -r.tolerance; break;
    case Relation::equality: r.pass = std::fabs(r.margin) <= r.tolerance; break;
  }
  if (r.status == Status::pass || r.status == Status::fail) r.status = r.pass ? Status::pass : Status::fail;
}

VerificationRecord check_main_theorem(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                      PalKind kind) {
  const int n = require_surface_dimension(body, 2, "check_main_theorem");
  VerificationRecord r = base("thm_1_1", body, &map, stats.seed);
  const Extended log_h = constants::h_n(n, kind).log_magnitude();
  r.lhs = body.boundary_area();
  r.rhs = decode(log_h + n * std::log(static_cast<Extended>(stats.mu_hat)));
  r.approximate = true;
  r.bound_orientation_notes = "lhs exact area; rhs uses " + mu_note(stats) + ", which raises h_n mu^n";
  param(r, "n", static_cast<std::int64_t>(n));
  param(r, "kind", std::string(constants::to_string(kind)));
  param(r, "log_h_n", static_cast<double>(log_h));
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_main_theorem(const ConvexBody& body, const DisplacementMap& map, PalKind kind, int samples,
                                      std::uint64_t seed) {
  return check_main_theorem(body, map, geometry::displacement_stats(body, map, samples, seed), kind);
}

std::vector<VerificationRecord> check_point_pair_bound(const ConvexBody& body, const Vec& x, const Vec& y,
                                                       std::optional<std::string> map_id) {
  const int n = require_surface_dimension(body, 2, "check_point_pair_bound");
  body.require_on_surface(x, "x");
  body.require_on_surface(y, "y");
  const geometry::Distance d = body.intrinsic_distance(x, y);
  const double chord = (y - x).norm();

  VerificationRecord r = base("prop_2_1", body, nullptr, 0);
  r.map_id = map_id;
  r.lhs = body.boundary_area();
  param(r, "n", static_cast<std::int64_t>(n));
  param(r, "d_M", d.value);
  param(r, "chord", chord);
  param(r, "distance_kind", std::string(to_string(d.kind)));
  if (!(chord > 0) || !(d.value > chord)) {
    r.status = Status::not_applicable;
    r.bound_orientation_notes = "d_M <= |y - x|: rho <= 1 lies outside the domain of I_n";
    settle(r);
    return {r};
  }
  const double rho = d.value / chord;
  const bool exact = d.kind == BoundKind::exact;
  r.approximate = !exact;
  r.bound_orientation_notes =
      exact ? "exact d_M and rho = d_M/|y - x|"
            : "upper-bound d_M inflates both rho and d_M^n on the rhs; the record is advisory, not a confirmation";
  if (!exact) r.status = Status::advisory;
  param(r, "rho", rho);
  const Extended log_d = n * std::log(static_cast<Extended>(d.value));
  r.rhs = decode(constants::i_n(n, rho).log_magnitude() + log_d);
  settle(r);
  std::vector<VerificationRecord> out{r};

  // both orthogonal hyperplanes support the body when x minimises and y
  // maximises the linear function along y - x
  const Vec u = (y - x) / chord;
  const double tol = geometry::ConvexBody::kSurfaceTol * body.scale();
  if (body.support(u) - u.dot(y) <= tol && body.support(-u) + u.dot(x) <= tol) {
    VerificationRecord s = r;
    s.theorem_id = "cor_2_7";
    s.rhs = decode(constants::i_star_n(n, rho).log_magnitude() + log_d);
    param(s, "support_planes", std::string("true"));
    settle(s);
    out.push_back(s);
  }
  return out;
}

VerificationRecord check_volume_bound(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                      PalKind kind) {
  const int d = body.ambient_dimension();
  const PalKind k = effective_kind(d, kind);
  VerificationRecord r = base("prop_3_1", body, &map, stats.seed);
  const Extended log_k = constants::pal_constant(d, k).log_magnitude();
  r.lhs = body.enclosed_volume();
  r.rhs = decode(log_k + d * (std::log(static_cast<Extended>(stats.mu_hat)) - std::log(static_cast<Extended>(stats.rho_hat))));
  r.approximate = true;
  r.bound_orientation_notes = "lhs exact volume; rhs uses " + mu_note(stats) + " and " + rho_note(stats) +
                              "; both raise K mu^d / rho^d";
  param(r, "d", static_cast<std::int64_t>(d));
  param(r, "kind", std::string(constants::to_string(k)));
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_volume_bound(const ConvexBody& body, const DisplacementMap& map, PalKind kind, int samples,
                                      std::uint64_t seed) {
  return check_volume_bound(body, map, geometry::displacement_stats(body, map, samples, seed), kind);
}

VerificationRecord check_area_via_isoperimetric(const ConvexBody& body, const DisplacementMap& map,
                                                const MapDisplacementStats& stats, PalKind kind) {
  const int n = require_surface_dimension(body, 2, "check_area_via_isoperimetric");
  VerificationRecord r = base("cor_3_2", body, &map, stats.seed);
  const Extended log_j = constants::j_n(n, stats.rho_hat, kind).log_magnitude();
  r.lhs = body.boundary_area();
  r.rhs = decode(log_j + n * std::log(static_cast<Extended>(stats.mu_hat)));
  r.approximate = true;
  r.bound_orientation_notes = "lhs exact area; rhs uses " + mu_note(stats) + " and " + rho_note(stats) +
                              "; J_n decreases in rho, so both raise J_n(rho) mu^n";
  param(r, "n", static_cast<std::int64_t>(n));
  param(r, "kind", std::string(constants::to_string(kind)));
  param(r, "isoperimetric_area_bound", geometry::isoperimetric_area_bound(body));
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_area_via_isoperimetric(const ConvexBody& body, const DisplacementMap& map, PalKind kind,
                                                int samples, std::uint64_t seed) {
  return check_area_via_isoperimetric(body, map, geometry::displacement_stats(body, map, samples, seed), kind);
}

VerificationRecord check_envelope(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                  PalKind kind) {
  const int n = require_surface_dimension(body, 2, "check_envelope");
  VerificationRecord r = base("prop_4_1", body, &map, stats.seed);
  const double rho_star = static_cast<double>(constants::rho_star(n, kind).rho_star);
  const Extended log_b = constants::envelope_b_n(n, stats.rho_hat, kind).log_magnitude();
  r.lhs = body.boundary_area();
  r.rhs = decode(log_b + n * std::log(static_cast<Extended>(stats.mu_hat)));
  r.approximate = true;
  if (stats.rho_hat <= rho_star) {
    r.bound_orientation_notes = "rhs uses " + mu_note(stats) + " and " + rho_note(stats) +
                                "; rho_hat <= rho* where B_n = J_n is non-increasing, so both raise the rhs";
  } else {
    r.status = Status::advisory;
    r.bound_orientation_notes = "rho_hat > rho* where B_n = I_n increases; an under-estimated rho lowers the rhs, "
                                "so the record is advisory";
  }
  param(r, "n", static_cast<std::int64_t>(n));
  param(r, "rho_star", rho_star);
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_pal_firey(const ConvexBody& body, PalKind kind) {
  const int d = body.ambient_dimension();
  const PalKind k = effective_kind(d, kind);
  VerificationRecord r = base("thm_3_6", body, nullptr, 0);
  const geometry::MinWidth w = geometry::min_width(body);
  r.lhs = body.enclosed_volume();
  r.rhs = decode(constants::pal_constant(d, k).log_magnitude() + d * std::log(static_cast<Extended>(w.value)));
  r.relation = Relation::non_strict;
  r.tolerance = 1e-12 * std::max(r.lhs, r.rhs);
  r.approximate = true;
  r.bound_orientation_notes = "lhs exact volume; rhs uses a searched minimum width, an upper bound on the true "
                              "minimum, which raises K_d w^d";
  param(r, "d", static_cast<std::int64_t>(d));
  param(r, "kind", std::string(constants::to_string(k)));
  param(r, "min_width", w.value);
  settle(r);
  return r;
}

VerificationRecord check_pal_cone() {
  // circumscribed polygon base: the polytope contains the cone, so its min
  // width bounds the cone's from above
  const double a = 1 / std::sqrt(3.0);
  constexpr int kSides = 256;
  const double radius = a / std::cos(kPi / kSides);
  std::vector<geometry::Point3> pts{geometry::Point3(0, 0, 1)};
  for (int i = 0; i < kSides; ++i) {
    const double t = 2 * kPi * i / kSides;
    pts.emplace_back(radius * std::cos(t), radius * std::sin(t), 0);
  }
  const geometry::Polytope3 hull(pts, 1, "cone_remark");
  const geometry::MinWidth w = geometry::min_width(hull);

  VerificationRecord r;
  r.theorem_id = "thm_3_6";
  r.body_id = "cone_remark";
  r.lhs = kPi / 6;         // ball of diameter 1
  r.rhs = kPi * a * a / 3;  // cone
  r.bound_orientation_notes = "closed-form volumes; the min width of the circumscribed polytope is a diagnostic";
  param(r, "min_width_circumscribed", w.value);
  param(r, "pal_firey_rhs", static_cast<double>(constants::pal_constant(3, PalKind::pal_firey).to_extended()));
  settle(r);
  return r;
}

VerificationRecord check_mean_width(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                    int samples, std::uint64_t seed) {
  using geometry::MeanWidthMethod;
  MeanWidthMethod method = MeanWidthMethod::monte_carlo;
  if (dynamic_cast<const geometry::PolygonBoundary*>(&body)) method = MeanWidthMethod::crofton_curve;
  if (dynamic_cast<const geometry::Polytope3*>(&body)) method = MeanWidthMethod::polytope_edge_formula;
  const geometry::MeanWidth mw = geometry::mean_width(body, method, seed, samples);

  VerificationRecord r = base("thm_1_4", body, &map, stats.seed);
  r.lhs = mw.value;
  r.rhs = 2 / kPi * stats.mu_hat;
  r.relation = Relation::non_strict;
  r.approximate = true;
  const double floor = 1e-12 * std::max(std::fabs(r.lhs), std::fabs(r.rhs));
  if (method == MeanWidthMethod::monte_carlo) {
    r.tolerance = std::max(3 * mw.standard_error, floor);
    r.bound_orientation_notes = "lhs Monte Carlo mean width with 3 standard errors of slack; rhs uses " + mu_note(stats);
  } else {
    r.tolerance = floor;
    r.bound_orientation_notes = "lhs exact mean width (" + std::string(to_string(method)) + "); rhs uses " + mu_note(stats);
  }
  param(r, "method", std::string(to_string(method)));
  param(r, "standard_error", mw.standard_error);
  param(r, "mean_width_samples", static_cast<std::int64_t>(mw.samples));
  param(r, "mean_width_seed", std::to_string(seed));
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_mean_width(const ConvexBody& body, const DisplacementMap& map, int samples, std::uint64_t seed) {
  const auto stats = geometry::displacement_stats(body, map, samples, seed);
  return check_mean_width(body, map, stats, samples, random::substream_seed(seed, "mean_width"));
}

VerificationRecord check_crofton(const geometry::PolygonBoundary& polygon, int samples, std::uint64_t seed,
                                 double relative_tolerance) {
  const geometry::MeanWidth mw = geometry::mean_width(polygon, geometry::MeanWidthMethod::monte_carlo, seed, samples);
  VerificationRecord r = base("thm_2_2", polygon, nullptr, seed);
  r.lhs = polygon.perimeter();
  r.rhs = kPi * mw.value;
  r.relation = Relation::equality;
  r.tolerance = relative_tolerance * r.lhs;
  r.approximate = true;
  r.bound_orientation_notes = "rhs is pi times a Monte Carlo mean width; the relative tolerance absorbs its error";
  param(r, "standard_error", mw.standard_error);
  param(r, "samples", static_cast<std::int64_t>(mw.samples));
  settle(r);
  return r;
}

VerificationRecord check_chakerian(const geometry::Polytope3& body, int directions, std::uint64_t seed) {
  if (directions < 1) throw ConfigurationError("chakerian check needs at least one direction");
  auto rng = random::substream(seed, "chakerian");
  VerificationRecord r = base("lem_2_7", body, nullptr, seed);
  r.relation = Relation::non_strict;
  r.lhs = body.enclosed_volume();
  r.rhs = -1;
  for (int i = 0; i < directions; ++i) {
    const geometry::ChakerianCheck c = geometry::chakerian_check(body, random::uniform_direction(rng, 3));
    if (c.rhs > r.rhs) {
      r.rhs = c.rhs;
      r.params = {};
      param(r, "segment", c.segment);
      param(r, "projected_area", c.projected_area);
    }
  }
  param(r, "directions", static_cast<std::int64_t>(directions));
  r.tolerance = 1e-12 * r.lhs;
  r.bound_orientation_notes = "segment is the chord through the centroid along the normal, projection area exact; "
                              "the record keeps the direction with the largest rhs";
  settle(r);
  return r;
}

VerificationRecord check_involution(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats) {
  if (!map.is_involution()) throw ConfigurationError("map " + map.id() + " is not an involution");
  VerificationRecord r = base("prop_b_1", body, &map, stats.seed);
  r.lhs = stats.rho_hat;
  r.rhs = 1;
  r.approximate = true;
  r.bound_orientation_notes = rho_note(stats) + ", so rho_hat > 1 implies rho > 1";
  stats_params(r, stats);
  settle(r);
  return r;
}

VerificationRecord check_chordal_gauss(const geometry::PolygonBoundary& polygon, const DisplacementMap& map, int samples,
                                       std::uint64_t seed) {
  const geometry::CoverageReport c = geometry::chordal_gauss_coverage(polygon, map, 360, samples, seed);
  VerificationRecord r = base("lem_3_4", polygon, &map, seed);
  r.lhs = c.winding_number.value_or(0);
  r.rhs = 1;
  r.relation = Relation::equality;
  r.approximate = true;
  r.bound_orientation_notes = "winding number of the sampled chordal Gauss map; degree (-1)^(n+1) = 1 for curves";
  param(r, "max_gap", c.max_gap);
  param(r, "mean_gap", c.mean_gap);
  param(r, "samples", static_cast<std::int64_t>(samples));
  settle(r);
  return r;
}

}  // namespace hyperarea::verify
