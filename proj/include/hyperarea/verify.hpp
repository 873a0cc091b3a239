#pragma once

// Inequality harness: evaluates both sides of each checked inequality on a
// (body, map) pair with approximations oriented against passing, and emits
// records.

#include "hyperarea/constants.hpp"
#include "hyperarea/geometry/bodies.hpp"
#include "hyperarea/geometry/body_io.hpp"
#include "hyperarea/geometry/maps.hpp"
#include "hyperarea/geometry/polytope.hpp"
#include "hyperarea/table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperarea::verify {

using geometry::ConvexBody;
using geometry::DisplacementMap;
using geometry::MapDisplacementStats;
using geometry::Vec;
using constants::PalKind;

enum class Relation { strict, non_strict, equality };
std::string_view to_string(Relation relation);
Relation parse_relation(std::string_view name);

enum class Status { pass, fail, advisory, not_applicable, error };
std::string_view to_string(Status status);
Status parse_status(std::string_view name);

struct VerificationRecord {
  std::string theorem_id;
  std::string body_id;
  std::optional<std::string> map_id;
  double lhs = 0, rhs = 0, margin = 0;  // margin = lhs - rhs
  Relation relation = Relation::strict;
  double tolerance = 0;  // slack for non_strict and equality relations
  bool pass = false;     // the relation evaluated on margin and tolerance
  Status status = Status::fail;
  bool approximate = false;  // an estimated quantity entered lhs or rhs
  std::string bound_orientation_notes;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;

  bool operator==(const VerificationRecord&) const = default;
};

/// Sets margin, pass and (unless advisory, not_applicable or error) status.
void settle(VerificationRecord& record);

/// Area > h_n mu^n with mu_hat >= mu on the right side. Needs n >= 2.
VerificationRecord check_main_theorem(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                      PalKind kind = PalKind::pal_firey);
VerificationRecord check_main_theorem(const ConvexBody& body, const DisplacementMap& map, PalKind kind, int samples,
                                      std::uint64_t seed);

/// Area > I_n(rho) d^n at rho = d/|y - x|, plus the I_n* record when the
/// hyperplanes orthogonal to y - x at x and y both support the body. Records
/// built on an upper-bound distance are advisory. Needs n >= 2.
std::vector<VerificationRecord> check_point_pair_bound(const ConvexBody& body, const Vec& x, const Vec& y,
                                                       std::optional<std::string> map_id = std::nullopt);

/// Vol > K_{n+1} mu^{n+1} / rho^{n+1} with mu_hat and rho_hat.
VerificationRecord check_volume_bound(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                      PalKind kind = PalKind::pal_firey);
VerificationRecord check_volume_bound(const ConvexBody& body, const DisplacementMap& map, PalKind kind, int samples,
                                      std::uint64_t seed);

/// Area > J_n(rho) mu^n with mu_hat and rho_hat. Needs n >= 2.
VerificationRecord check_area_via_isoperimetric(const ConvexBody& body, const DisplacementMap& map,
                                                const MapDisplacementStats& stats, PalKind kind = PalKind::pal_firey);
VerificationRecord check_area_via_isoperimetric(const ConvexBody& body, const DisplacementMap& map, PalKind kind,
                                                int samples, std::uint64_t seed);

/// Area > B_n(rho) mu^n with B_n = max(I_n, J_n). Advisory when rho_hat lies
/// past the crossing, where B_n increases. Needs n >= 2.
VerificationRecord check_envelope(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                  PalKind kind = PalKind::pal_firey);

/// Vol >= K_d w^d with the min-width upper bound; equality allowed.
VerificationRecord check_pal_firey(const ConvexBody& body, PalKind kind = PalKind::pal_firey);

/// The cone of height 1 over a disk of radius 1/sqrt(3) in R^3: its min width
/// (computed on a circumscribed polytope) is 1 and its volume is below the
/// ball of diameter 1. lhs = ball volume, rhs = cone volume.
VerificationRecord check_pal_cone();

/// Mean width >= (2/pi) mu. Exact mean width for polygons and polytopes,
/// Monte Carlo otherwise with 3 standard errors of slack.
VerificationRecord check_mean_width(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats,
                                    int samples, std::uint64_t seed);
VerificationRecord check_mean_width(const ConvexBody& body, const DisplacementMap& map, int samples, std::uint64_t seed);

/// |L - pi Xi_MC| <= relative_tolerance * L for a polygon.
VerificationRecord check_crofton(const geometry::PolygonBoundary& polygon, int samples, std::uint64_t seed,
                                 double relative_tolerance = 0.005);

/// Vol >= L(segment) Area(projection) / 3 along `directions` random normals;
/// the record carries the smallest margin.
VerificationRecord check_chakerian(const geometry::Polytope3& body, int directions, std::uint64_t seed);

/// rho_hat > 1 for an involution.
VerificationRecord check_involution(const ConvexBody& body, const DisplacementMap& map, const MapDisplacementStats& stats);

/// The chordal Gauss map of a polygon has winding number 1.
VerificationRecord check_chordal_gauss(const geometry::PolygonBoundary& polygon, const DisplacementMap& map, int samples,
                                       std::uint64_t seed);

struct SuiteConfig {
  std::vector<std::string> analytic_bodies = {"unit_sphere", "cylinder_rho20", "triangle"};
  int polytopes = 20;
  int polytope_vertices = 24;
  std::vector<geometry::MapKind> maps = {geometry::MapKind::central_point, geometry::MapKind::euclidean_antipode,
                                         geometry::MapKind::half_perimeter};
  int samples = 10000;
  int crofton_samples = 200000;
  int chakerian_directions = 10;
  std::uint64_t seed = 7;
  PalKind kind = PalKind::pal_firey;
};

struct SuiteSummary {
  int records = 0, passed = 0, failed = 0, advisory = 0, not_applicable = 0, errors = 0;
  int missing_notes = 0;
};

/// Every record for the configured bodies and maps, sorted by
/// (theorem_id, body_id, map_id). A check that throws becomes an error record.
std::vector<VerificationRecord> run_suite(const SuiteConfig& config);
/// The bodies of the suite, analytic ones first.
std::vector<geometry::BodyPtr> suite_bodies(const SuiteConfig& config);

/// Records with an approximate input and no orientation notes.
int audit_orientation_notes(const std::vector<VerificationRecord>& records);
SuiteSummary summarize(const std::vector<VerificationRecord>& records);

table::Table records_table(const std::vector<VerificationRecord>& records);
/// Inverse of records_table. Throws ConfigurationError on a foreign table.
std::vector<VerificationRecord> records_from_table(const table::Table& table);

}  // namespace hyperarea::verify
