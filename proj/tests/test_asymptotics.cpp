#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperarea/asymptotics.hpp"
#include "hyperarea/errors.hpp"

#include <cmath>
#include <numbers>

using namespace hyperarea;
using namespace hyperarea::asymptotics;

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("inverse series basics") {
  const InverseSeries s1 = inverse_series(1, 200);
  // f_1(rho) = rho (rho - 1): inverse (1 + sqrt(1 + 4y))/2
  const InverseValue v = evaluate_inverse(s1, 0.1L);
  CHECK(std::fabs(double(v.value) - (1 + std::sqrt(1.4)) / 2) < 1e-12);
  CHECK(evaluate_inverse(s1, 0).value == 1);
  for (int N : {1, 2, 7, 100}) {
    const InverseSeries s = inverse_series(N, 5);
    CHECK(s.coefficients[0].to_double() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(s.coefficients[1].to_double(), -1.0 / N) < 1e-14);
  }
  CHECK(rel(double(inverse_series(2, 3).radius), 2 / std::pow(3.0, 1.5)) < 1e-15);
  CHECK_THROWS_AS(inverse_series(0, 5), DomainError);
  CHECK_THROWS_AS(inverse_series(2, 1), DomainError);
}

TEST_CASE("third coefficient by hand") {
  // k = 3: (+1) (3/N)(3/N + 1) / 6
  for (int N : {1, 2, 5}) {
    const double x = 3.0 / N;
    CHECK(rel(inverse_series(N, 3).coefficients[2].to_double(), x * (x + 1) / 6) < 1e-14);
  }
}

TEST_CASE("log-gamma coefficients agree with the ratio recurrence") {
  for (int N : {1, 3, 49, 4999}) {
    const InverseSeries s = inverse_series(N, 600);
    const auto by_ratio = coefficient_log_magnitudes_by_ratio(N, 600);
    REQUIRE(by_ratio.size() == s.coefficients.size());
    for (size_t k = 0; k < by_ratio.size(); ++k) {
      CAPTURE(N);
      CAPTURE(k);
      REQUIRE(std::fabs(double(by_ratio[k] - s.coefficients[k].log_magnitude())) < 1e-11);
    }
  }
}

TEST_CASE("inverse at C_n recovers rho_n*") {
  for (int n : {50, 500, 5000}) {
    const InverseSeries s = inverse_series(n - 1, 400);
    const Extended c = constants::c_n(n).to_extended();
    const InverseValue v = evaluate_inverse(s, c);
    CHECK(std::fabs(double(f_forward(n - 1, v.value) - c)) <= 1e-8 * double(c));
    CHECK(rel(double(v.value), double(constants::rho_star(n).rho_star)) < 1e-12);
  }
}

TEST_CASE("more terms give a smaller residual inside the radius") {
  for (int N : {1, 3, 20}) {
    const InverseSeries s = inverse_series(N, 256);
    const Extended y = 0.5L * s.radius;
    Extended prev = partial_sum(s, y, 2).residual;
    for (int terms = 4; terms <= 256; terms *= 2) {
      const Extended r = partial_sum(s, y, terms).residual;
      if (prev < 1e-15L) break;
      CHECK(r < prev);
      prev = r;
    }
  }
}

TEST_CASE("radius law for N = 1..200") {
  for (int N = 1; N <= 200; ++N) {
    CAPTURE(N);
    const InverseSeries s = inverse_series(N, 2000);
    const InverseValue inside = partial_sum(s, 0.95L * s.radius, 2000);
    const InverseValue out_short = partial_sum(s, 1.05L * s.radius, 500);
    const InverseValue out_long = partial_sum(s, 1.05L * s.radius, 2000);
    REQUIRE(inside.residual < 1e-12L);
    REQUIRE(inside.last_term < 1e-20L);
    REQUIRE(out_long.last_term > out_short.last_term);
    REQUIRE(out_long.last_term > 1);
    REQUIRE(out_long.residual > 1);
    REQUIRE_THROWS_AS(evaluate_inverse(s, 1.05L * s.radius), DivergenceError);
    REQUIRE_THROWS_AS(evaluate_inverse(s, -1.05L * s.radius), DivergenceError);
  }
}

TEST_CASE("consecutive coefficient ratio tends to 1/radius") {
  for (int N : {1, 2, 10, 100}) {
    const InverseSeries s = inverse_series(N, 1001);
    const double ratio = std::exp(double(s.coefficients[1000].log_magnitude() - s.coefficients[999].log_magnitude()));
    CHECK(rel(ratio, 1 / double(s.radius)) < 0.01);
  }
}

TEST_CASE("Phi_N") {
  // N = 1, k = 2: (2 + 1)/(4 + 1 - 1) (2/3)^1 = 1/2
  CHECK(std::fabs(double(phi_N(1, 2)) - 0.5) < 1e-15);
  for (int N : {1, 2, 5, 50}) {
    Extended prev = phi_N(N, 2);
    for (long long k = 3; k <= 10000; ++k) {
      const Extended p = phi_N(N, k);
      REQUIRE(p <= prev);
      prev = p;
    }
  }
  for (int N : {1, 2, 10, 100}) CHECK(std::fabs(double(phi_N(N, 1000000)) - N / ((N + 1.0) * kE)) <= 1e-5);
  CHECK_THROWS_AS(phi_N(1, 1), DomainError);
}

TEST_CASE("asymptotic formulas at n = 4 and n = 5 by hand") {
  CHECK(std::fabs(double(asymptotic_c_n(4)) - 0.885701539126081096) < 1e-15);
  CHECK(std::fabs(double(asymptotic_rho_star(4)) - 1.885701539126081096) < 1e-15);
  CHECK(std::fabs(double(asymptotic_log_h_n(4)) - -4.578886585325731310) < 1e-14);
  CHECK(std::fabs(double(asymptotic_log_h_n_factorial_form(4)) - -3.687849594842999674) < 1e-13);
  CHECK(std::fabs(double(asymptotic_ab_ratio(4)) - 3.212221762255096648) < 1e-14);
  CHECK(std::fabs(double(asymptotic_c_n(4, PalKind::bezdek)) - 1.038636854159127360) < 1e-15);
  CHECK(std::fabs(double(asymptotic_rho_star(4, PalKind::bezdek)) - 2.038636854159127360) < 1e-15);
  CHECK(std::fabs(double(asymptotic_log_h_n(4, PalKind::bezdek)) - -4.194155248855893746) < 1e-14);
  CHECK(std::fabs(double(asymptotic_c_n(5, PalKind::bezdek)) - 1.294477379071351540) < 1e-15);
  CHECK(std::fabs(double(asymptotic_rho_star(5, PalKind::bezdek)) - 2.294477379071351540) < 1e-15);
  CHECK(std::fabs(double(asymptotic_log_h_n(5, PalKind::bezdek)) - -5.170931048026193262) < 1e-14);
  CHECK(std::fabs(double(asymptotic_log_suboptimality(4)) - -3.260101378838895544) < 1e-14);
}

TEST_CASE("log h_n is dominated by -n ln n") {
  double prev = 0;
  for (int n : {100, 10000, 1000000}) {
    const double ratio = double(asymptotic_log_h_n(n)) / (-n * std::log(double(n)));
    CHECK(ratio > prev);
    CHECK(ratio < 1);
    prev = ratio;
  }
  CHECK(prev > 0.9);
}

TEST_CASE("factorial form matches the leading form to O(1/n)") {
  for (int n : {10, 100, 1000, 100000}) {
    const double leading = double(asymptotic_log_h_n(n)) + std::sqrt(2 * kE / kPi) * std::log(double(n)) / std::sqrt(double(n));
    const double diff = std::fabs(double(asymptotic_log_h_n_factorial_form(n)) - leading);
    CHECK(diff * n < 0.1);
  }
}

TEST_CASE("compare against the exact pipeline") {
  const auto ab = compare({100000}, Quantity::ab_ratio);
  CHECK(ab[0].rel_error <= 0.02);
  CHECK(std::fabs(double(ab[0].exact) - 2 * std::sqrt(kE)) <= 0.02);

  const auto c = compare({100, 1000, 10000}, Quantity::c_n);
  CHECK(c[1].rel_error < c[0].rel_error);
  CHECK(c[2].rel_error < c[1].rel_error);

  const auto rho = compare({100, 1000, 10000}, Quantity::rho_star);
  CHECK(rho[1].abs_error < rho[0].abs_error);
  CHECK(rho[2].abs_error < rho[1].abs_error);

  const auto h = compare({100, 1000, 10000}, Quantity::log_h_n);
  CHECK(h[1].rel_error < h[0].rel_error);
  CHECK(h[2].rel_error < h[1].rel_error);
  CHECK(h[2].rel_error < 0.005);
  CHECK(h[2].abs_error <= 10 * std::log(10000.0));
  for (const auto& r : h) CHECK(r.abs_error == std::fabs(r.exact - r.asymptotic));

  const auto hb = compare({100, 1000, 10000}, Quantity::bezdek_log_h_n);
  CHECK(hb[1].rel_error < hb[0].rel_error);
  CHECK(hb[2].rel_error < hb[1].rel_error);
  const auto hb_odd = compare({101, 1001, 10001}, Quantity::bezdek_log_h_n);
  CHECK(hb_odd[2].rel_error < hb_odd[0].rel_error);
}

TEST_CASE("suboptimality asymptotics") {
  for (int n : {1000, 10000}) {
    const double exact = double(constants::suboptimality_factor(n).log_magnitude());
    CHECK(rel(double(asymptotic_log_suboptimality(n)), exact) < 0.01);
  }
}

TEST_CASE("measured thresholds") {
  const int bracket = measure_bracket_threshold(1000);
  const int radius = measure_radius_threshold(1000);
  const int monotone = measure_monotone_terms_threshold(1000);
  MESSAGE("bracket n0 = " << bracket << ", radius n0 = " << radius << ", monotone-terms n0 = " << monotone);
  CHECK(bracket >= 2);
  CHECK(bracket <= 100);
  CHECK(measure_bracket_threshold(1000) == bracket);
  CHECK(radius >= 2);
  CHECK(monotone >= radius);
}

TEST_CASE("quantity names") {
  for (Quantity q : {Quantity::c_n, Quantity::rho_star, Quantity::log_h_n, Quantity::ab_ratio, Quantity::bezdek_log_h_n})
    CHECK(parse_quantity(to_string(q)) == q);
  CHECK_THROWS_AS(parse_quantity("nope"), ConfigurationError);
}
