#pragma once

// Series inversion of f_N(rho) = rho^{1/N} (rho - 1) around rho = 1 and the
// large-n formulas for C_n, rho_n*, h_n and A_n/B_n.

#include "hyperarea/constants.hpp"
#include "hyperarea/numerics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hyperarea::asymptotics {

using constants::PalKind;
using numerics::Extended;
using numerics::LogReal;

/// f_N(rho) = rho^{1/N} (rho - 1).
Extended f_forward(int order_N, Extended rho);

struct InverseSeries {
  int order_N = 1;
  /// coefficients[k - 1] is the coefficient of y^k, k = 1..max_terms.
  std::vector<LogReal> coefficients;
  /// N / (N+1)^{1 + 1/N}.
  Extended radius = 0;
};

/// Coefficients (-1)^{k-1} (k/N)^{(k-1)} / k!, built from log-gamma so that
/// degrees in the thousands stay finite.
InverseSeries inverse_series(int order_N, int max_terms);

/// ln|a_k|, k = 1..max_terms, accumulated from the consecutive-coefficient ratio
/// ((N+1)k + 1 - N)/(Nk + N) * prod_{j<k-1} (k+1+Nj)/(k+Nj). O(max_terms^2);
/// an independent check on the log-gamma route.
std::vector<Extended> coefficient_log_magnitudes_by_ratio(int order_N, int max_terms);

struct InverseValue {
  Extended value = 0;
  /// |f_N(value) - y|; +inf when value <= 0, where f_N has no real value.
  Extended residual = 0;
  /// Magnitude of the last term added.
  Extended last_term = 0;
  int terms_used = 0;
};

/// Truncated series 1 + sum a_k y^k, stopping once a term falls below
/// 1e-16 of the partial sum or the coefficients run out. Throws
/// DivergenceError for |y| >= radius.
InverseValue evaluate_inverse(const InverseSeries& series, Extended y);

/// Partial sum through exactly `terms` coefficients, with no radius guard.
InverseValue partial_sum(const InverseSeries& series, Extended y, int terms);

/// Phi_N(k) = (Nk + N)/((N+1)k + 1 - N) * (k/(k+1))^{k-1}.
Extended phi_N(int order_N, long long k);

Extended asymptotic_c_n(int n, PalKind kind = PalKind::pal_firey);
Extended asymptotic_rho_star(int n, PalKind kind = PalKind::pal_firey);
Extended asymptotic_log_h_n(int n, PalKind kind = PalKind::pal_firey);
/// ln h^_n from the factorial form e^{e/pi}/n! sqrt(8 pi n/(3e)) e^{-sqrt(2en/pi)}.
Extended asymptotic_log_h_n_factorial_form(int n);
/// exp(ln(2 sqrt e) + ln n/(2n) - 1/sqrt(2 pi n)).
Extended asymptotic_ab_ratio(int n);
/// ln of the leading-order suboptimality factor h_n / (sigma_n / pi^n).
Extended asymptotic_log_suboptimality(int n);

enum class Quantity { c_n, rho_star, log_h_n, ab_ratio, bezdek_log_h_n };

std::string_view to_string(Quantity q);
/// Throws ConfigurationError on an unknown name.
Quantity parse_quantity(std::string_view name);

struct AsymptoticReport {
  int n = 0;
  Quantity quantity = Quantity::c_n;
  Extended exact = 0;
  Extended asymptotic = 0;
  Extended abs_error = 0;
  Extended rel_error = 0;
};

/// Exact value from the constants module beside the asymptotic formula.
/// bezdek_log_h_n always uses the Bezdek constant; the other quantities use `kind`.
std::vector<AsymptoticReport> compare(const std::vector<int>& n_values, Quantity quantity,
                                      PalKind kind = PalKind::pal_firey);

/// Smallest n0 in [2, n_max] such that 1 + C_n - C_n^2/(n-1) <= rho_n* <= 1 + C_n
/// holds for every n in [n0, n_max]; 0 if it fails at n_max.
int measure_bracket_threshold(int n_max, PalKind kind = PalKind::pal_firey);

/// Smallest n0 such that C_n lies inside the radius of the series for f_{n-1}^{-1}
/// for every n in [n0, n_max]; 0 if it fails at n_max.
int measure_radius_threshold(int n_max, PalKind kind = PalKind::pal_firey);

/// As above for the stricter monotone-terms regime |y| < N/((N+1)e).
int measure_monotone_terms_threshold(int n_max, PalKind kind = PalKind::pal_firey);

}  // namespace hyperarea::asymptotics
