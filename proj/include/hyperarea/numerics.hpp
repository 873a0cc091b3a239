#pragma once

// Log-domain arithmetic and the special functions every other module uses.
//
// Factorial-scale quantities (ball volumes, Pal constants, the crossing value
// h_n) leave the double range long before the dimensions we scan, so they are
// carried as natural logarithms. Log magnitudes are held in extended precision
// (long double): at n ~ 1e6 the logs themselves are ~1e7 in size and a double
// would only resolve them to ~1e-9.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperarea::numerics {

using Extended = long double;
using Rational = boost::multiprecision::cpp_rational;

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

/// Linear-scale decoding is only offered while |ln x| stays below this.
inline constexpr Extended kDecodeLimit = 700.0L;

/// Signed real stored as (sign, ln|x|).
class LogReal {
 public:
  /// Zero.
  constexpr LogReal() = default;

  static LogReal from_log(Extended log_magnitude, Sign sign = Sign::positive);
  static LogReal from_value(Extended x);
  static LogReal zero() { return {}; }

  Sign sign() const { return sign_; }
  bool is_zero() const { return sign_ == Sign::zero; }
  /// ln|x|; -inf for zero.
  Extended log_magnitude() const;

  /// True when the value can be decoded to linear scale (|ln x| < 700 or zero).
  bool decodable() const;
  /// Linear-scale value; throws DomainError when not decodable.
  double to_double() const;
  Extended to_extended() const;
  std::optional<double> try_to_double() const;

  LogReal operator-() const;
  LogReal operator*(const LogReal& other) const;
  LogReal operator/(const LogReal& other) const;
  LogReal operator+(const LogReal& other) const;
  LogReal operator-(const LogReal& other) const;
  LogReal& operator*=(const LogReal& other) { return *this = *this * other; }
  LogReal& operator/=(const LogReal& other) { return *this = *this / other; }
  LogReal& operator+=(const LogReal& other) { return *this = *this + other; }

  /// |x|^p carrying the sign only for p == 1; requires x >= 0 otherwise.
  LogReal pow(Extended exponent) const;

  std::partial_ordering operator<=>(const LogReal& other) const;
  bool operator==(const LogReal& other) const = default;

 private:
  LogReal(Sign sign, Extended log_magnitude) : sign_(sign), log_magnitude_(log_magnitude) {}

  Sign sign_ = Sign::zero;
  Extended log_magnitude_ = 0.0L;
};

std::string to_string(const LogReal& x);

struct BinetConfig {
  /// Number of Bernoulli correction terms N.
  int series_terms = 5;
  /// Arguments below this are raised with Gamma(z+1) = z Gamma(z) first.
  Extended shift_threshold = 10.0L;

  /// Throws ConfigurationError unless series_terms >= 1 and shift_threshold >= 8.
  void validate() const;
};

/// Settings used by the ball, sphere and factorial helpers below: the remainder
/// at z = 16 with 8 terms is ~1e-21, below extended-precision rounding.
inline constexpr BinetConfig kExtendedBinet{8, 16.0L};

/// ln Gamma(z) for z > 0 via Binet's expansion of ln Gamma(z+1).
Extended log_gamma(Extended z, const BinetConfig& cfg = {});

/// Exact Bernoulli numbers B_2, B_4, ..., B_{2 count}; count in [1, 30].
/// Computed once from sum_{k<=m} C(m+1,k) B_k = 0 and cached.
std::vector<Rational> bernoulli_numbers(int count);

/// ln omega_n, the volume of the unit n-ball; omega_0 = 1.
Extended log_unit_ball_volume(int n);

/// ln sigma_n, the area of the unit n-sphere in R^{n+1}.
Extended log_unit_sphere_area(int n);

/// ln d!! summed over the parity class of d.
Extended log_double_factorial(int d);

/// ln n! (= ln Gamma(n+1)).
Extended log_factorial(int n);

/// |a - b| <= tol on log scale.
inline bool log_close(Extended a, Extended b, Extended tol = 1e-10L) {
  return (a > b ? a - b : b - a) <= tol;
}

}  // namespace hyperarea::numerics
