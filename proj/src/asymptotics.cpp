#include "hyperarea/asymptotics.hpp"

#include "hyperarea/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hyperarea::asymptotics {

namespace nm = hyperarea::numerics;

namespace {

constexpr Extended kPi = std::numbers::pi_v<Extended>;
constexpr Extended kE = std::numbers::e_v<Extended>;
constexpr int kMaxTerms = 10000;
constexpr Extended kTruncation = 1e-16L;

void require_order(int order_N) {
  if (order_N < 1) throw DomainError("series order N must be >= 1");
}

Extended ln(Extended x) { return std::log(x); }

Extended forward_residual(int order_N, Extended value, Extended y) {
  if (!(value > 0)) return std::numeric_limits<Extended>::infinity();
  return std::fabs(f_forward(order_N, value) - y);
}

}  // namespace

Extended f_forward(int order_N, Extended rho) {
  require_order(order_N);
  return std::pow(rho, 1.0L / order_N) * (rho - 1);
}

InverseSeries inverse_series(int order_N, int max_terms) {
  require_order(order_N);
  if (max_terms < 2) throw DomainError("inverse_series: max_terms must be >= 2");
  InverseSeries s;
  s.order_N = order_N;
  const Extended N = order_N;
  s.radius = N / std::pow(N + 1, 1 + 1 / N);
  s.coefficients.reserve(max_terms);
  s.coefficients.push_back(LogReal::from_value(1));
  for (int k = 2; k <= max_terms; ++k) {
    // (k/N)^{(k-1)} = Gamma(k/N + k - 1) / Gamma(k/N)
    const Extended x = k / N;
    const Extended log_mag =
        nm::log_gamma(x + k - 1, nm::kExtendedBinet) - nm::log_gamma(x, nm::kExtendedBinet) - nm::log_factorial(k);
    s.coefficients.push_back(LogReal::from_log(log_mag, k % 2 == 0 ? nm::Sign::negative : nm::Sign::positive));
  }
  return s;
}

std::vector<Extended> coefficient_log_magnitudes_by_ratio(int order_N, int max_terms) {
  require_order(order_N);
  const Extended N = order_N;
  std::vector<Extended> out{0};
  for (int k = 1; k < max_terms; ++k) {
    Extended log_ratio = ln(((N + 1) * k + 1 - N) / (N * k + N));
    for (int j = 0; j <= k - 2; ++j) log_ratio += std::log1p(1 / (k + N * j));
    out.push_back(out.back() + log_ratio);
  }
  return out;
}

InverseValue partial_sum(const InverseSeries& series, Extended y, int terms) {
  InverseValue out;
  out.value = 1;
  if (y != 0) {
    const Extended log_y = ln(std::fabs(y));
    const bool negative_y = y < 0;
    const int limit = std::min<int>(terms, static_cast<int>(series.coefficients.size()));
    for (int k = 1; k <= limit; ++k) {
      const LogReal& a = series.coefficients[k - 1];
      const Extended mag = std::exp(a.log_magnitude() + k * log_y);
      const bool neg = (a.sign() == nm::Sign::negative) != (negative_y && k % 2 == 1);
      out.value += neg ? -mag : mag;
      out.last_term = mag;
      out.terms_used = k;
    }
  }
  out.residual = forward_residual(series.order_N, out.value, y);
  return out;
}

InverseValue evaluate_inverse(const InverseSeries& series, Extended y) {
  if (!(std::fabs(y) < series.radius))
    throw DivergenceError("evaluate_inverse: |y| = " + std::to_string(double(std::fabs(y))) +
                          " outside radius " + std::to_string(double(series.radius)));
  InverseValue out;
  out.value = 1;
  if (y != 0) {
    const Extended log_y = ln(std::fabs(y));
    const int limit = std::min<int>(kMaxTerms, static_cast<int>(series.coefficients.size()));
    for (int k = 1; k <= limit; ++k) {
      const LogReal& a = series.coefficients[k - 1];
      const Extended mag = std::exp(a.log_magnitude() + k * log_y);
      const bool neg = (a.sign() == nm::Sign::negative) != (y < 0 && k % 2 == 1);
      out.value += neg ? -mag : mag;
      out.last_term = mag;
      out.terms_used = k;
      if (k < limit) {
        const Extended next = std::exp(series.coefficients[k].log_magnitude() + (k + 1) * log_y);
        if (next < kTruncation * std::fabs(out.value)) break;
      }
    }
  }
  out.residual = forward_residual(series.order_N, out.value, y);
  return out;
}

Extended phi_N(int order_N, long long k) {
  require_order(order_N);
  if (k < 2) throw DomainError("phi_N: k must be >= 2");
  const Extended N = order_N;
  const Extended kk = static_cast<Extended>(k);
  // (k/(k+1))^{k-1} = exp(-(k-1) ln(1 + 1/k))
  return (N * kk + N) / ((N + 1) * kk + 1 - N) * std::exp(-(kk - 1) * std::log1p(1 / kk));
}

Extended asymptotic_c_n(int n, PalKind kind) {
  const Extended x = n;
  const Extended corr = kind == PalKind::pal_firey ? 1 + ln(x) / x : 1 + 0.75L * ln(x) / x;
  if (kind == PalKind::pal_firey) return std::sqrt(2 * kE / (kPi * x)) * corr;
  return std::sqrt((n % 2 == 0 ? kE : 2 * kE) / x) * corr;
}

Extended asymptotic_rho_star(int n, PalKind kind) {
  const Extended x = n;
  const Extended tail = ln(x) / std::pow(x, 1.5L);
  if (kind == PalKind::pal_firey) {
    const Extended s = std::sqrt(2 * kE / kPi);
    return 1 + s / std::sqrt(x) + s * tail;
  }
  const Extended s = std::sqrt(n % 2 == 0 ? kE : 2 * kE);
  return 1 + s / std::sqrt(x) + 0.75L * s * tail;
}

Extended asymptotic_log_h_n(int n, PalKind kind) {
  const Extended x = n;
  const Extended lnx = ln(x);
  const Extended base = x - x * lnx;
  if (kind == PalKind::pal_firey) {
    return base - std::sqrt(2 * kE * x / kPi) + 0.5L * ln(4 / (3 * kE)) + kE / kPi -
           std::sqrt(2 * kE / kPi) * lnx / std::sqrt(x);
  }
  if (n % 2 == 0) {
    return (kE - 1) / 2 + 0.25L * ln(9 / (2 * kPi * x)) + x / 2 * ln(kPi / 2) + base - std::sqrt(kE * x) -
           0.75L * std::sqrt(kE) * lnx / std::sqrt(x);
  }
  return kE + 0.25L * ln(9 / (8 * kPi * kPi * kPi * x)) + x / 2 * ln(kPi) + base - std::sqrt(2 * kE * x) -
         0.75L * std::sqrt(2 * kE) * lnx / std::sqrt(x);
}

Extended asymptotic_log_h_n_factorial_form(int n) {
  const Extended x = n;
  return kE / kPi - nm::log_factorial(n) + 0.5L * ln(8 * kPi * x / (3 * kE)) - std::sqrt(2 * kE * x / kPi);
}

Extended asymptotic_ab_ratio(int n) {
  const Extended x = n;
  return std::exp(ln(2 * std::sqrt(kE)) + ln(x) / (2 * x) - 1 / std::sqrt(2 * kPi * x));
}

Extended asymptotic_log_suboptimality(int n) {
  const Extended x = n;
  return ln(2 * std::exp(kE / kPi) / std::sqrt(6 * kE)) - std::sqrt(2 * kE * x / kPi) + x / 2 * ln(kPi / 2) +
         0.25L * ln(2 * kPi * x) - 0.5L * nm::log_factorial(n) - std::sqrt(2 * kE / kPi) * ln(x) / std::sqrt(x);
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::c_n: return "c_n";
    case Quantity::rho_star: return "rho_star";
    case Quantity::log_h_n: return "log_h_n";
    case Quantity::ab_ratio: return "ab_ratio";
    case Quantity::bezdek_log_h_n: return "bezdek_log_h_n";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : {Quantity::c_n, Quantity::rho_star, Quantity::log_h_n, Quantity::ab_ratio,
                     Quantity::bezdek_log_h_n})
    if (to_string(q) == name) return q;
  throw ConfigurationError("unknown asymptotic quantity: " + std::string(name));
}

std::vector<AsymptoticReport> compare(const std::vector<int>& n_values, Quantity quantity, PalKind kind) {
  std::vector<AsymptoticReport> out;
  out.reserve(n_values.size());
  for (int n : n_values) {
    if (n < 2) throw DomainError("compare: n must be >= 2");
    AsymptoticReport r;
    r.n = n;
    r.quantity = quantity;
    switch (quantity) {
      case Quantity::c_n:
        r.exact = constants::c_n(n, kind).to_extended();
        r.asymptotic = asymptotic_c_n(n, kind);
        break;
      case Quantity::rho_star:
        r.exact = constants::rho_star(n, kind).rho_star;
        r.asymptotic = asymptotic_rho_star(n, kind);
        break;
      case Quantity::log_h_n:
        r.exact = constants::h_n(n, kind).log_magnitude();
        r.asymptotic = asymptotic_log_h_n(n, kind);
        break;
      case Quantity::ab_ratio:
        r.exact = (constants::a_n(n) / constants::b_n(n)).to_extended();
        r.asymptotic = asymptotic_ab_ratio(n);
        break;
      case Quantity::bezdek_log_h_n:
        r.exact = constants::h_n(n, PalKind::bezdek).log_magnitude();
        r.asymptotic = asymptotic_log_h_n(n, PalKind::bezdek);
        break;
    }
    r.abs_error = std::fabs(r.exact - r.asymptotic);
    r.rel_error = r.abs_error / std::fabs(r.exact);
    out.push_back(r);
  }
  return out;
}

namespace {

template <class Holds>
int trailing_threshold(int n_max, int n_min, Holds holds) {
  if (n_max < n_min) throw DomainError("threshold scan: n_max below the first admissible n");
  int n = n_max;
  while (n >= n_min && holds(n)) --n;
  return n == n_max ? 0 : n + 1;
}

}  // namespace

int measure_bracket_threshold(int n_max, PalKind kind) {
  return trailing_threshold(n_max, 2, [kind](int n) {
    const Extended c = constants::c_n(n, kind).to_extended();
    const Extended r = constants::rho_star(n, kind).rho_star;
    return 1 + c - c * c / (n - 1) <= r && r <= 1 + c;
  });
}

int measure_radius_threshold(int n_max, PalKind kind) {
  return trailing_threshold(n_max, 2, [kind](int n) {
    const Extended N = n - 1;
    return constants::c_n(n, kind).to_extended() < N / std::pow(N + 1, 1 + 1 / N);
  });
}

int measure_monotone_terms_threshold(int n_max, PalKind kind) {
  return trailing_threshold(n_max, 2, [kind](int n) {
    const Extended N = n - 1;
    return constants::c_n(n, kind).to_extended() < N / ((N + 1) * kE);
  });
}

}  // namespace hyperarea::asymptotics
