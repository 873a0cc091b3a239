#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperarea/constants.hpp"
#include "hyperarea/errors.hpp"
#include "hyperarea/parallel.hpp"
#include "hyperarea/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

using namespace hyperarea;
using namespace hyperarea::verify;
using geometry::DisplacementMap;

namespace {

constexpr double kPi = std::numbers::pi;

std::string param_of(const VerificationRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.params)
    if (k == key) return v;
  return "";
}

// Small configuration shared by the determinism and round-trip tests.
SuiteConfig small_config() {
  SuiteConfig c;
  c.polytopes = 3;
  c.samples = 400;
  c.crofton_samples = 20000;
  c.chakerian_directions = 3;
  return c;
}

}  // namespace

TEST_CASE("unit sphere + antipode: main theorem margin 4 pi - h_2 pi^2") {
  const geometry::SphereBody s(3);
  const auto map = DisplacementMap::euclidean_antipode();
  const auto r = check_main_theorem(s, map, constants::PalKind::pal_firey, 200, 1);
  const double h2 = constants::h_n(2).to_double();
  CHECK(r.theorem_id == "thm_1_1");
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.lhs - 4 * kPi) < 1e-12);
  CHECK(std::fabs(r.margin - (4 * kPi - h2 * kPi * kPi)) < 1e-12);
  CHECK(!r.bound_orientation_notes.empty());
}

TEST_CASE("unit sphere + antipode: volume bound (4/3) pi - K_3 pi^3 / (pi/2)^3") {
  const geometry::SphereBody s(3);
  const auto r = check_volume_bound(s, DisplacementMap::euclidean_antipode(), constants::PalKind::pal_firey, 200, 1);
  const double k3 = 2 / (std::sqrt(3.0) * 6);
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.margin - (4 * kPi / 3 - 8 * k3)) < 1e-12);
}

TEST_CASE("triangle + half-perimeter: volume bound with mu = 3L/2, rho = 2") {
  const auto t = geometry::PolygonBoundary::equilateral_triangle(2);
  const auto r = check_volume_bound(t, DisplacementMap::half_perimeter(), constants::PalKind::pal_firey, 500, 3);
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.lhs - std::sqrt(3.0)) < 1e-14);
  // K_2 = 1/sqrt(3); rhs = K_2 (3)^2 / 2^2
  CHECK(std::fabs(r.rhs - 9 / (4 * std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("Pal equality on the equilateral triangle") {
  for (double L : {1.0, 3.0}) {
    const auto r = check_pal_firey(geometry::PolygonBoundary::equilateral_triangle(L));
    CHECK(r.relation == Relation::non_strict);
    CHECK(std::fabs(r.margin) <= 1e-12 * r.lhs);
    CHECK(r.status == Status::pass);
  }
  const auto sq = check_pal_firey(geometry::PolygonBoundary::regular(4, 4));
  CHECK(sq.margin > 0.1);
}

TEST_CASE("cone of the Pal remark: width 1, smaller than the ball") {
  const auto r = check_pal_cone();
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.lhs - kPi / 6) < 1e-15);
  CHECK(std::fabs(r.rhs - kPi / 9) < 1e-15);
  const double w = std::stod(param_of(r, "min_width_circumscribed"));
  CHECK(w >= 1 - 1e-9);
  CHECK(w < 1 + 1e-3);
  CHECK(r.rhs >= std::stod(param_of(r, "pal_firey_rhs")));
}

TEST_CASE("cylinder cap centres: I_n* applies with rho = 20") {
  const auto c = geometry::CylinderBody::from_rho(2, 20, "cyl");
  const auto records = check_point_pair_bound(c, c.cap_center(false), c.cap_center(true));
  REQUIRE(records.size() == 2);
  CHECK(records[0].theorem_id == "prop_2_1");
  CHECK(records[1].theorem_id == "cor_2_7");
  const double i_star = kPi / 2 * std::pow(19.0 / 20, 2);
  CHECK(std::fabs(records[1].rhs - i_star) < 1e-12);
  CHECK(records[1].status == Status::pass);
  CHECK(records[0].status == Status::pass);
  CHECK(records[0].rhs < records[1].rhs);
}

TEST_CASE("sphere antipodes: rho = pi/2") {
  const geometry::SphereBody s(3);
  Eigen::Vector3d x(0.6, 0, 0.8);
  const auto records = check_point_pair_bound(s, geometry::Vec(x), geometry::Vec(-x));
  REQUIRE(!records.empty());
  CHECK(std::fabs(std::stod(param_of(records[0], "rho")) - kPi / 2) < 1e-12);
  CHECK(records[0].status == Status::pass);
  // curves are outside the point-pair bound; coincident points are outside its domain
  CHECK_THROWS_AS(check_point_pair_bound(geometry::PolygonBoundary::equilateral_triangle(1), geometry::Vec::Zero(2),
                                         geometry::Vec::Zero(2)),
                  DomainError);
  const auto same = check_point_pair_bound(s, geometry::Vec(x), geometry::Vec(x));
  CHECK(same.front().status == Status::not_applicable);
}

TEST_CASE("polytope point pairs are advisory") {
  const auto p = geometry::random_polytope(5, 24, geometry::PolytopeShape::pancake);
  const auto map = DisplacementMap::central_point();
  const auto stats = geometry::displacement_stats(p, map, 300, 2);
  const auto records = check_point_pair_bound(p, stats.argmax_point, map(p, stats.argmax_point), map.id());
  REQUIRE(!records.empty());
  CHECK(records[0].status == Status::advisory);
  CHECK(records[0].approximate);
  CHECK(records[0].lhs > 2 * records[0].rhs);
}

TEST_CASE("envelope: advisory past the crossing, checked before it") {
  const auto c = geometry::CylinderBody::from_rho(2, 20, "cyl");
  const auto map = DisplacementMap::euclidean_antipode();
  const auto stats = geometry::displacement_stats(c, map, 500, 4);
  CHECK(stats.rho_hat > constants::rho_star(2).rho_star);
  CHECK(check_envelope(c, map, stats).status == Status::advisory);

  const geometry::SphereBody s(3);
  const auto sphere_stats = geometry::displacement_stats(s, map, 500, 4);
  const auto r = check_envelope(s, map, sphere_stats);
  CHECK(r.status == Status::pass);
  // B_2 = J_2 below the crossing
  CHECK(std::fabs(r.rhs - check_area_via_isoperimetric(s, map, sphere_stats).rhs) < 1e-12);
}

TEST_CASE("mean width: sphere equality with 10^6 samples, triangle equality") {
  const geometry::SphereBody s(3);
  const auto r = check_mean_width(s, DisplacementMap::euclidean_antipode(), 1000000, 7);
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.margin) <= r.tolerance);
  CHECK(std::fabs(r.rhs - 2) < 1e-12);

  const auto t = geometry::PolygonBoundary::equilateral_triangle(1);
  const auto tr = check_mean_width(t, DisplacementMap::half_perimeter(), 500, 7);
  CHECK(param_of(tr, "method") == "crofton_curve");
  CHECK(std::fabs(tr.margin) <= 1e-12);
  CHECK(tr.status == Status::pass);
}

TEST_CASE("Crofton on polygons within 0.5%") {
  const auto hex = geometry::PolygonBoundary::regular(6, 6);
  const auto r = check_crofton(hex, 200000, 11);
  CHECK(r.theorem_id == "thm_2_2");
  CHECK(r.relation == Relation::equality);
  CHECK(r.status == Status::pass);
  CHECK(std::fabs(r.margin) <= 0.005 * 6);
}

TEST_CASE("Chakerian on random polytopes") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = geometry::random_polytope(seed, 24);
    const auto r = check_chakerian(p, 10, seed);
    CHECK(r.status == Status::pass);
    CHECK(r.rhs > 0);
  }
}

TEST_CASE("involution: rho_hat > 1 for central maps on random polytopes") {
  for (int i = 0; i < 3; ++i) {
    const auto p = geometry::random_polytope(40 + i, 24, static_cast<geometry::PolytopeShape>(i));
    const auto map = DisplacementMap::central_point();
    const auto r = check_involution(p, map, geometry::displacement_stats(p, map, 300, 1));
    CHECK(r.status == Status::pass);
    CHECK(r.lhs > 1);
  }
  const auto custom = DisplacementMap::custom("identity", [](const geometry::ConvexBody&, const geometry::Vec& x) { return x; });
  const geometry::SphereBody s(3);
  CHECK_THROWS_AS(check_involution(s, custom, {}), ConfigurationError);
}

TEST_CASE("chordal Gauss map of a polygon has winding number 1") {
  const auto hex = geometry::PolygonBoundary::regular(6, 6);
  for (auto map : {DisplacementMap::central_point(), DisplacementMap::half_perimeter(), DisplacementMap::euclidean_antipode()}) {
    const auto r = check_chordal_gauss(hex, map, 2000, 3);
    CHECK(r.lhs == 1);
    CHECK(r.status == Status::pass);
  }
}

TEST_CASE("dimension preconditions") {
  const auto t = geometry::PolygonBoundary::equilateral_triangle(1);
  CHECK_THROWS_AS(check_main_theorem(t, DisplacementMap::half_perimeter(), constants::PalKind::pal_firey, 10, 1), DomainError);
  CHECK_THROWS_AS(check_area_via_isoperimetric(t, DisplacementMap::half_perimeter(), constants::PalKind::pal_firey, 10, 1),
                  DomainError);
}

TEST_CASE("settle: relations and preserved statuses") {
  VerificationRecord r;
  r.lhs = 1;
  r.rhs = 1;
  settle(r);
  CHECK(!r.pass);
  CHECK(r.status == Status::fail);
  r.relation = Relation::non_strict;
  settle(r);
  CHECK(r.pass);
  CHECK(r.status == Status::pass);
  r.relation = Relation::equality;
  r.rhs = 1 + 1e-9;
  r.tolerance = 1e-12;
  settle(r);
  CHECK(!r.pass);
  r.status = Status::advisory;
  settle(r);
  CHECK(r.status == Status::advisory);
}

TEST_CASE("suite: deterministic, sorted, audited") {
  const SuiteConfig config = small_config();
  const auto a = run_suite(config);
  parallel::set_thread_count(2);
  const auto b = run_suite(config);
  parallel::set_thread_count(0);
  CHECK(a == b);
  CHECK(table::to_string(records_table(a), table::Format::csv) == table::to_string(records_table(b), table::Format::csv));
  for (size_t i = 1; i < a.size(); ++i)
    CHECK(std::tie(a[i - 1].theorem_id, a[i - 1].body_id, a[i - 1].map_id) <= std::tie(a[i].theorem_id, a[i].body_id, a[i].map_id));
  const SuiteSummary s = summarize(a);
  CHECK(s.failed == 0);
  CHECK(s.errors == 0);
  CHECK(s.missing_notes == 0);
  CHECK(s.passed > 0);

  auto broken = a;
  broken.front().approximate = true;
  broken.front().bound_orientation_notes.clear();
  CHECK(audit_orientation_notes(broken) == 1);
}

TEST_CASE("suite: a failing generator becomes an error record") {
  SuiteConfig config = small_config();
  config.polytopes = 0;
  config.analytic_bodies = {"unit_sphere", "no_such_body"};
  const auto records = run_suite(config);
  int errors = 0;
  for (const auto& r : records)
    if (r.status == Status::error) {
      ++errors;
      CHECK(r.body_id == "no_such_body");
    }
  CHECK(errors == 1);
  CHECK(summarize(records).passed > 0);
}

TEST_CASE("records round-trip through csv and json lines") {
  SuiteConfig config = small_config();
  config.polytopes = 1;
  auto records = run_suite(config);
  records.front().seed = 0xfedcba9876543210ULL;
  records.front().bound_orientation_notes = "quotes \"and\", commas";
  for (auto format : {table::Format::csv, table::Format::json_lines}) {
    std::stringstream io(table::to_string(records_table(records), format));
    const auto back = records_from_table(table::read(io, format));
    CHECK(back == records);
  }
}
