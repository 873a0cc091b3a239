#include "hyperarea/constants.hpp"

#include "hyperarea/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace hyperarea::constants {

namespace nm = hyperarea::numerics;

namespace {

constexpr Extended kPi = std::numbers::pi_v<Extended>;
constexpr Extended kCrossingResidual = 1e-10L;
constexpr Extended kBracketLow = 1e-12L;  // on rho - 1
constexpr Extended kBracketHigh = 1e6L;   // on rho

const Extended kLn2 = std::log(2.0L);
const Extended kLn3 = std::log(3.0L);
const Extended kLnPi = std::log(kPi);

void require_dimension(int n) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
}

void require_rho(Extended rho) {
  if (!std::isfinite(rho) || rho <= 1) throw DomainError("rho must be finite and > 1");
}

LogReal positive(Extended log_value) { return LogReal::from_log(log_value); }

// ln r with r = (n-1) omega_{n-1} / omega_{n-2}; rho_n = r/(r-1), B_n = 1/(r-1).
Extended log_branch_ratio(int n) {
  return std::log(static_cast<Extended>(n - 1)) + nm::log_unit_ball_volume(n - 1) -
         nm::log_unit_ball_volume(n - 2);
}

// ln of the right side of rho (rho-1)^{n-1} = C_n^{n-1}.
Extended log_crossing_rhs(int n, PalKind kind) {
  const Extended ln_n = std::log(static_cast<Extended>(n));
  const Extended ln_n1 = std::log(static_cast<Extended>(n - 1));
  const Extended ratio = pal_constant(n + 1, kind).log_magnitude() - nm::log_unit_ball_volume(n + 1);
  return ln_n + ln_n1 + (n - 1) * kLn2 + kLnPi + nm::log_unit_ball_volume(n - 1) -
         nm::log_unit_ball_volume(n - 2) + static_cast<Extended>(n) / (n + 1) * ratio;
}

}  // namespace

std::string_view to_string(PalKind kind) { return kind == PalKind::pal_firey ? "pal_firey" : "bezdek"; }

std::string_view to_string(Branch branch) { return branch == Branch::first ? "first" : "second"; }

PalKind parse_pal_kind(std::string_view name) {
  if (name == "pal_firey") return PalKind::pal_firey;
  if (name == "bezdek") return PalKind::bezdek;
  throw ConfigurationError("unknown Pal constant kind: " + std::string(name));
}

Extended log_shrink(Extended rho) {
  require_rho(rho);
  const Extended x = rho - 1;
  return std::log(x) - std::log1p(x);
}

Extended rho_n(int n) {
  require_dimension(n);
  return -1 / std::expm1(-log_branch_ratio(n));
}

LogReal i_n_first_branch(int n, Extended rho) {
  require_dimension(n);
  return positive(nm::log_unit_ball_volume(n - 1) - std::log(static_cast<Extended>(n)) - (n - 2) * kLn2 +
                  n * log_shrink(rho));
}

LogReal i_n_second_branch(int n, Extended rho) {
  require_dimension(n);
  return positive(nm::log_unit_ball_volume(n - 2) - std::log(static_cast<Extended>(n)) -
                  std::log(static_cast<Extended>(n - 1)) - (n - 2) * kLn2 + (n - 1) * log_shrink(rho));
}

LogReal i_n(int n, Extended rho) {
  require_dimension(n);
  require_rho(rho);
  return rho <= rho_n(n) ? i_n_first_branch(n, rho) : i_n_second_branch(n, rho);
}

LogReal i_bar_n(int n, Extended rho) {
  require_dimension(n);
  require_rho(rho);
  return positive(nm::log_unit_ball_volume(n) - (n - 1) * kLn2 + (n - 1) * log_shrink(rho) +
                  std::log1p((n - 1) / rho));
}

LogReal i_star_n(int n, Extended rho) {
  require_dimension(n);
  require_rho(rho);
  return positive(nm::log_unit_ball_volume(n) - (n - 1) * kLn2 + n * log_shrink(rho));
}

LogReal pal_constant(int d, PalKind kind) {
  if (d < 2) throw DomainError("pal_constant: d must be >= 2");
  if (kind == PalKind::pal_firey) return positive(kLn2 - kLn3 / 2 - nm::log_factorial(d));
  if (d < 3) throw DomainError("pal_constant: Bezdek constant requires d >= 3");
  const auto df = nm::log_double_factorial;
  Extended log_sq;
  if (d % 2 == 0) {
    log_sq = kLn3 + (d - 3) * kLnPi + df(d + 2) - 2 * std::log(static_cast<Extended>(d + 1)) - 2 * df(d) -
             3 * df(d - 1);
  } else {
    log_sq = kLn3 + (d - 3) * kLnPi + df(d + 1) - (d - 2) * kLn2 - 5 * df(d);
  }
  return positive(log_sq / 2);
}

LogReal j_n(int n, Extended rho, PalKind kind) {
  require_dimension(n);
  if (!std::isfinite(rho) || rho < 1) throw DomainError("j_n: rho must be finite and >= 1");
  const Extended ratio = pal_constant(n + 1, kind).log_magnitude() - nm::log_unit_ball_volume(n + 1);
  return positive(nm::log_unit_sphere_area(n) + static_cast<Extended>(n) / (n + 1) * ratio -
                  n * std::log(rho));
}

LogReal a_n(int n, PalKind kind) {
  require_dimension(n);
  const Extended ratio = pal_constant(n + 1, kind).log_magnitude() - nm::log_unit_ball_volume(n + 1);
  return positive(((n - 1) * kLn2 + kLnPi + std::log(static_cast<Extended>(n))) / n + ratio / (n + 1));
}

LogReal b_n(int n) {
  require_dimension(n);
  return positive(-std::log(std::expm1(log_branch_ratio(n))));
}

LogReal c_n(int n, PalKind kind) {
  require_dimension(n);
  return positive(log_crossing_rhs(n, kind) / (n - 1));
}

Crossing rho_star(int n, PalKind kind, Extended tol) {
  require_dimension(n);
  if (!(tol > 0)) throw DomainError("rho_star: tol must be positive");

  const LogReal a = a_n(n, kind);
  Crossing out;
  if (a <= b_n(n)) {
    out = {1 + a.to_extended(), Branch::first};
  } else {
    // x = rho - 1 solves g(x) = ln x + ln(1 + x)/(n-1) - ln C_n = 0; g is increasing.
    const Extended log_c = c_n(n, kind).log_magnitude();
    const Extended m = n - 1;
    auto g = [&](Extended x) { return std::log(x) + std::log1p(x) / m - log_c; };
    Extended lo = std::log(kBracketLow);
    Extended hi = std::log(kBracketHigh - 1);
    if (!(g(std::exp(lo)) < 0 && g(std::exp(hi)) > 0)) {
      std::ostringstream os;
      os << "rho_star: no bracket in [1+1e-12, 1e6] for n=" << n << " (g(lo)=" << double(g(std::exp(lo)))
         << ", g(hi)=" << double(g(std::exp(hi))) << ")";
      throw NumericalError(os.str());
    }
    while (hi - lo > tol) {
      const Extended mid = (lo + hi) / 2;
      if (mid == lo || mid == hi) break;
      (g(std::exp(mid)) < 0 ? lo : hi) = mid;
    }
    Extended x = std::exp((lo + hi) / 2);
    for (int step = 0; step < 2; ++step) x -= g(x) / (1 / x + 1 / (m * (1 + x)));
    out = {1 + x, Branch::second};
    if (!(out.rho_star > rho_n(n))) {
      std::ostringstream os;
      os << "rho_star: second-branch root " << double(out.rho_star) << " not beyond rho_n = " << double(rho_n(n))
         << " for n=" << n;
      throw NumericalError(os.str());
    }
  }

  const Extended residual = i_n(n, out.rho_star).log_magnitude() - j_n(n, out.rho_star, kind).log_magnitude();
  if (!(std::fabs(residual) <= kCrossingResidual)) {
    std::ostringstream os;
    os << "rho_star: crossing residual " << double(residual) << " at n=" << n;
    throw NumericalError(os.str());
  }
  return out;
}

LogReal h_n(int n, PalKind kind) { return j_n(n, rho_star(n, kind).rho_star, kind); }

ConstantsRow constants_row(int n, PalKind kind) {
  ConstantsRow row;
  row.n = n;
  row.kind = kind;
  row.rho_n = rho_n(n);
  row.a_n = a_n(n, kind);
  row.b_n = b_n(n);
  row.c_n = c_n(n, kind);
  const Crossing c = rho_star(n, kind);
  row.rho_star = c.rho_star;
  row.branch = c.branch;
  row.log_h_n = j_n(n, c.rho_star, kind).log_magnitude();
  return row;
}

LogReal envelope_b_n(int n, Extended rho, PalKind kind) {
  const LogReal j = j_n(n, rho, kind);
  if (rho == 1) return j;
  return std::max(i_n(n, rho), j);
}

LogReal sphere_reference(int n) {
  if (n < 1) throw DomainError("sphere_reference: n must be >= 1");
  return positive(nm::log_unit_sphere_area(n) - n * kLnPi);
}

LogReal mean_curvature_constant(int n) {
  if (n < 1) throw DomainError("mean_curvature_constant: n must be >= 1");
  return positive((n - 1) * std::log(static_cast<Extended>(n)) + nm::log_unit_sphere_area(n) - kLnPi);
}

LogReal suboptimality_factor(int n, PalKind kind) { return h_n(n, kind) / sphere_reference(n); }

Extended quoted_h2_closed_form() {
  const Extended q = kPi / 6;
  const Extended denom = 1 + std::pow(q, 1.0L / 6);
  return std::cbrt(q) / (denom * denom);
}

double quoted_h(int n) {
  switch (n) {
    case 2: return 0.2237;
    case 3: return 0.0443;
    case 4: return 0.0080;
    default: return 0.0;
  }
}

ScaledCrossing scaled_j_crossing(int n, Extended log_scale, PalKind kind) {
  require_dimension(n);
  auto diff = [&](Extended u) {
    const Extended rho = 1 + std::exp(u);
    return i_n(n, rho).log_magnitude() - j_n(n, rho, kind).log_magnitude() - log_scale;
  };
  Extended lo = std::log(kBracketLow);
  Extended hi = std::log(kBracketHigh - 1);
  if (!(diff(lo) < 0 && diff(hi) > 0)) throw NumericalError("scaled_j_crossing: no sign change");
  for (int it = 0; it < 200 && hi - lo > 1e-15L; ++it) {
    const Extended mid = (lo + hi) / 2;
    (diff(mid) < 0 ? lo : hi) = mid;
  }
  const Extended rho = 1 + std::exp((lo + hi) / 2);
  return {rho, j_n(n, rho, kind).log_magnitude() + log_scale};
}

}  // namespace hyperarea::constants
