#include "hyperarea/cli.hpp"

#include "hyperarea/errors.hpp"
#include "hyperarea/parallel.hpp"

#include <charconv>
#include <cmath>

namespace hyperarea::cli {

namespace {

using numerics::Extended;
using table::Cell;

int parse_int(const std::string& s) {
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw ConfigurationError("not an integer: '" + s + "'");
  return v;
}

void check_n(int n) {
  if (n < kMinN || n > kMaxN)
    throw ConfigurationError("n = " + std::to_string(n) + " outside [" + std::to_string(kMinN) + ", " +
                             std::to_string(kMaxN) + "]");
}

Cell log_cell(Extended x) { return static_cast<double>(x); }

}  // namespace

std::vector<int> parse_n_values(const std::string& text) {
  if (text.empty()) throw ConfigurationError("empty n range");
  std::vector<int> out;
  for (const char* sep : {"..", "-"}) {
    const size_t pos = text.find(sep);
    if (pos != std::string::npos && pos > 0) {
      const int a = parse_int(text.substr(0, pos));
      const int b = parse_int(text.substr(pos + std::string(sep).size()));
      check_n(a);
      check_n(b);
      if (b < a) throw ConfigurationError("reversed n range " + text);
      for (int n = a; n <= b; ++n) out.push_back(n);
      return out;
    }
  }
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = std::min(text.find(',', start), text.size());
    const int n = parse_int(text.substr(start, end - start));
    check_n(n);
    out.push_back(n);
    start = end + 1;
  }
  return out;
}

Cell linear_cell(const numerics::LogReal& x) {
  if (x.is_zero()) return 0.0;
  if (const auto d = x.try_to_double(); d && std::isfinite(*d) && *d != 0 && std::fabs(*d) >= 2.2250738585072014e-308)
    return *d;
  return std::string(x.log_magnitude() < 0 ? "underflow" : "overflow");
}

table::Table constants_table(const std::vector<int>& n_values, constants::PalKind kind) {
  table::Table t;
  t.name = "constants";
  t.columns = {"n",         "kind",     "rho_n",        "a_n",          "b_n",
               "c_n",       "rho_star", "branch",       "log_h_n",      "h_n",
               "paper_quoted", "paper_closed_form", "log_sphere_reference", "sphere_reference",
               "log_suboptimality", "suboptimality"};
  std::vector<std::vector<Cell>> rows(n_values.size());
  parallel::parallel_for(n_values.size(), [&](size_t i) {
    const int n = n_values[i];
    const constants::ConstantsRow r = constants::constants_row(n, kind);
    const numerics::LogReal h = numerics::LogReal::from_log(r.log_h_n);
    const numerics::LogReal sphere = constants::sphere_reference(n);
    const numerics::LogReal factor = constants::suboptimality_factor(n, kind);
    const double quoted = constants::quoted_h(n);
    rows[i] = {static_cast<std::int64_t>(n),
               std::string(constants::to_string(kind)),
               static_cast<double>(r.rho_n),
               linear_cell(r.a_n),
               linear_cell(r.b_n),
               linear_cell(r.c_n),
               static_cast<double>(r.rho_star),
               std::string(constants::to_string(r.branch)),
               log_cell(r.log_h_n),
               linear_cell(h),
               quoted != 0 ? Cell(quoted) : Cell(std::monostate{}),
               n == 2 ? Cell(static_cast<double>(constants::quoted_h2_closed_form())) : Cell(std::monostate{}),
               log_cell(sphere.log_magnitude()),
               linear_cell(sphere),
               log_cell(factor.log_magnitude()),
               linear_cell(factor)};
  });
  for (auto& row : rows) t.add_row(std::move(row));
  return t;
}

ScanSummary scan_ab(int n_first, int n_last, constants::PalKind kind, std::vector<double>* rows) {
  check_n(n_first);
  check_n(n_last);
  if (n_last < n_first) throw ConfigurationError("reversed n range");
  const size_t count = static_cast<size_t>(n_last - n_first + 1);
  std::vector<double> log_ratio(count);
  constexpr size_t kChunk = 4096;
  parallel::parallel_for((count + kChunk - 1) / kChunk, [&](size_t c) {
    for (size_t i = c * kChunk; i < std::min(count, (c + 1) * kChunk); ++i) {
      const int n = n_first + static_cast<int>(i);
      log_ratio[i] = static_cast<double>(constants::a_n(n, kind).log_magnitude() - constants::b_n(n).log_magnitude());
    }
  });
  ScanSummary s;
  s.n_first = n_first;
  s.n_last = n_last;
  s.min_ratio = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < count; ++i) {
    const int n = n_first + static_cast<int>(i);
    const double ratio = std::exp(log_ratio[i]);
    if (!(log_ratio[i] > 0)) {
      ++s.violations;
      if (s.first_violation == 0) s.first_violation = n;
    }
    if (ratio < s.min_ratio) {
      s.min_ratio = ratio;
      s.argmin = n;
    }
    if (rows) rows->push_back(ratio);
  }
  s.ratio_at_last = std::exp(log_ratio.back());
  return s;
}

table::Table scan_summary_table(const ScanSummary& s) {
  table::Table t;
  t.name = "scan_ab";
  t.columns = {"n_first", "n_last", "violations", "first_violation", "min_ratio", "argmin", "ratio_at_n_last",
               "two_sqrt_e"};
  t.add_row({static_cast<std::int64_t>(s.n_first), static_cast<std::int64_t>(s.n_last),
             static_cast<std::int64_t>(s.violations),
             s.first_violation ? Cell(static_cast<std::int64_t>(s.first_violation)) : Cell(std::monostate{}), s.min_ratio,
             static_cast<std::int64_t>(s.argmin), s.ratio_at_last, 2 * std::exp(0.5)});
  return t;
}

table::Table asymptotics_table(const std::vector<int>& n_values, asymptotics::Quantity quantity, constants::PalKind kind) {
  table::Table t;
  t.name = "asymptotics";
  t.columns = {"n", "quantity", "exact", "asymptotic", "abs_error", "rel_error"};
  for (const auto& r : asymptotics::compare(n_values, quantity, kind))
    t.add_row({static_cast<std::int64_t>(r.n), std::string(asymptotics::to_string(r.quantity)),
               static_cast<double>(r.exact), static_cast<double>(r.asymptotic), static_cast<double>(r.abs_error),
               static_cast<double>(r.rel_error)});
  return t;
}

table::Table thresholds_table(int n_max, constants::PalKind kind) {
  check_n(n_max);
  table::Table t;
  t.name = "thresholds";
  t.columns = {"n_max", "kind", "bracket_n0", "radius_n0", "monotone_terms_n0"};
  t.add_row({static_cast<std::int64_t>(n_max), std::string(constants::to_string(kind)),
             static_cast<std::int64_t>(asymptotics::measure_bracket_threshold(n_max, kind)),
             static_cast<std::int64_t>(asymptotics::measure_radius_threshold(n_max, kind)),
             static_cast<std::int64_t>(asymptotics::measure_monotone_terms_threshold(n_max, kind))});
  return t;
}

}  // namespace hyperarea::cli
