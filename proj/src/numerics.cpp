#include "hyperarea/numerics.hpp"

#include "hyperarea/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hyperarea::numerics {

namespace {

constexpr Extended kPi = std::numbers::pi_v<Extended>;
constexpr int kMaxBernoulli = 30;

Sign multiply_signs(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

Sign flip(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

// B_0 .. B_{2*kMaxBernoulli}, all indices (odd ones beyond B_1 are zero).
const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    const int top = 2 * kMaxBernoulli;
    std::vector<Rational> b(top + 1);
    b[0] = 1;
    for (int m = 1; m <= top; ++m) {
      // sum_{k=0}^{m} C(m+1, k) B_k = 0
      Rational acc = 0;
      boost::multiprecision::cpp_int binom = 1;  // C(m+1, 0)
      for (int k = 0; k < m; ++k) {
        acc += Rational(binom) * b[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[m] = -acc / Rational(binom);  // binom is now C(m+1, m) = m+1
    }
    return b;
  }();
  return table;
}

// Bernoulli coefficients B_{2k}/(2k(2k-1)) in extended precision.
const std::vector<Extended>& binet_coefficients() {
  static const std::vector<Extended> coeffs = [] {
    const auto& b = bernoulli_table();
    std::vector<Extended> c;
    for (int k = 1; k <= kMaxBernoulli; ++k) {
      Rational q = b[2 * k] / Rational(2 * k * (2 * k - 1));
      c.push_back(q.convert_to<Extended>());
    }
    return c;
  }();
  return coeffs;
}

}  // namespace

LogReal LogReal::from_log(Extended log_magnitude, Sign sign) {
  if (sign == Sign::zero) return {};
  if (std::isinf(log_magnitude) && log_magnitude < 0) return {};
  if (!std::isfinite(log_magnitude)) throw DomainError("LogReal: non-finite log magnitude");
  return {sign, log_magnitude};
}

LogReal LogReal::from_value(Extended x) {
  if (!std::isfinite(x)) throw DomainError("LogReal: non-finite value");
  if (x == 0) return {};
  return {x > 0 ? Sign::positive : Sign::negative, std::log(std::fabs(x))};
}

Extended LogReal::log_magnitude() const {
  return is_zero() ? -std::numeric_limits<Extended>::infinity() : log_magnitude_;
}

bool LogReal::decodable() const {
  return is_zero() || std::fabs(log_magnitude_) < kDecodeLimit;
}

Extended LogReal::to_extended() const {
  if (!decodable()) throw DomainError("LogReal: magnitude outside decodable range: " + to_string(*this));
  if (is_zero()) return 0;
  return static_cast<int>(sign_) * std::exp(log_magnitude_);
}

double LogReal::to_double() const { return static_cast<double>(to_extended()); }

std::optional<double> LogReal::try_to_double() const {
  if (!decodable()) return std::nullopt;
  return to_double();
}

LogReal LogReal::operator-() const { return is_zero() ? *this : LogReal(flip(sign_), log_magnitude_); }

LogReal LogReal::operator*(const LogReal& other) const {
  if (is_zero() || other.is_zero()) return {};
  return {multiply_signs(sign_, other.sign_), log_magnitude_ + other.log_magnitude_};
}

LogReal LogReal::operator/(const LogReal& other) const {
  if (other.is_zero()) throw DomainError("LogReal: division by zero");
  if (is_zero()) return {};
  return {multiply_signs(sign_, other.sign_), log_magnitude_ - other.log_magnitude_};
}

LogReal LogReal::operator+(const LogReal& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const LogReal& big = log_magnitude_ >= other.log_magnitude_ ? *this : other;
  const LogReal& small = log_magnitude_ >= other.log_magnitude_ ? other : *this;
  const Extended d = small.log_magnitude_ - big.log_magnitude_;
  if (big.sign_ == small.sign_) return {big.sign_, big.log_magnitude_ + std::log1p(std::exp(d))};
  if (d == 0) return {};
  return {big.sign_, big.log_magnitude_ + std::log1p(-std::exp(d))};
}

LogReal LogReal::operator-(const LogReal& other) const { return *this + (-other); }

LogReal LogReal::pow(Extended exponent) const {
  if (!std::isfinite(exponent)) throw DomainError("LogReal::pow: non-finite exponent");
  if (is_zero()) {
    if (exponent > 0) return {};
    throw DomainError("LogReal::pow: zero to a non-positive power");
  }
  Sign s = Sign::positive;
  if (sign_ == Sign::negative) {
    if (exponent != std::floor(exponent)) throw DomainError("LogReal::pow: negative base, fractional exponent");
    if (std::fmod(std::fabs(exponent), 2.0L) == 1.0L) s = Sign::negative;
  }
  return {s, log_magnitude_ * exponent};
}

std::partial_ordering LogReal::operator<=>(const LogReal& other) const {
  const int sa = static_cast<int>(sign_);
  const int sb = static_cast<int>(other.sign_);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::partial_ordering::equivalent;
  if (sa > 0) return log_magnitude_ <=> other.log_magnitude_;
  return other.log_magnitude_ <=> log_magnitude_;
}

std::string to_string(const LogReal& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os.precision(17);
  os << (x.sign() == Sign::negative ? "-" : "+") << "exp(" << static_cast<double>(x.log_magnitude()) << ")";
  return os.str();
}

void BinetConfig::validate() const {
  if (series_terms < 1 || series_terms > kMaxBernoulli)
    throw ConfigurationError("BinetConfig: series_terms must lie in [1, 30]");
  if (!(shift_threshold >= 8)) throw ConfigurationError("BinetConfig: shift_threshold must be >= 8");
}

Extended log_gamma(Extended z, const BinetConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(z) || z <= 0) throw DomainError("log_gamma: argument must be positive and finite");

  // Gamma(z) = Gamma(z + m) / (z (z+1) ... (z+m-1))
  Extended product = 1;
  while (z < cfg.shift_threshold) {
    product *= z;
    z += 1;
  }

  const auto& c = binet_coefficients();
  const Extended inv = 1 / z;
  const Extended inv2 = inv * inv;
  Extended power = inv;  // z^{-(2k-1)}
  Extended series = 0;
  for (int k = 0; k < cfg.series_terms; ++k) {
    series += c[k] * power;
    power *= inv2;
  }
  // ln Gamma(z) = ln Gamma(z+1) - ln z
  const Extended value = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * kPi) + series;
  return value - std::log(product);
}

std::vector<Rational> bernoulli_numbers(int count) {
  if (count < 1 || count > kMaxBernoulli)
    throw ConfigurationError("bernoulli_numbers: count must lie in [1, 30]");
  const auto& b = bernoulli_table();
  std::vector<Rational> out;
  out.reserve(count);
  for (int k = 1; k <= count; ++k) out.push_back(b[2 * k]);
  return out;
}

Extended log_unit_ball_volume(int n) {
  if (n < 0) throw DomainError("log_unit_ball_volume: n must be non-negative");
  if (n == 0) return 0;
  const Extended half = static_cast<Extended>(n) / 2;
  return half * std::log(kPi) - log_gamma(half + 1, kExtendedBinet);
}

Extended log_unit_sphere_area(int n) {
  if (n < 1) throw DomainError("log_unit_sphere_area: n must be positive");
  const Extended half = static_cast<Extended>(n + 1) / 2;
  return std::log(2.0L) + half * std::log(kPi) - log_gamma(half, kExtendedBinet);
}

Extended log_double_factorial(int d) {
  if (d < 1) throw DomainError("log_double_factorial: d must be positive");
  if (d <= 4096) {
    Extended sum = 0;
    for (int k = d; k >= 1; k -= 2) sum += std::log(static_cast<Extended>(k));
    return sum;
  }
  // (2m)!! = 2^m m!,  (2m-1)!! = (2m)! / (2^m m!)
  const Extended ln2 = std::log(2.0L);
  if (d % 2 == 0) {
    const int m = d / 2;
    return m * ln2 + log_factorial(m);
  }
  const int m = (d + 1) / 2;
  return log_factorial(2 * m) - m * ln2 - log_factorial(m);
}

Extended log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: n must be non-negative");
  if (n < 2) return 0;
  return log_gamma(static_cast<Extended>(n) + 1, kExtendedBinet);
}

}  // namespace hyperarea::numerics
