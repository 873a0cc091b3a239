#pragma once

// Command-line front end: argument parsing, table builders for each command
// and exit-code mapping.

#include "hyperarea/asymptotics.hpp"
#include "hyperarea/constants.hpp"
#include "hyperarea/table.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperarea::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kNumerical = 3 };

inline constexpr int kMinN = 2;
inline constexpr int kMaxN = 1000000;

/// "a..b", "a-b", a comma list or a single integer. Throws ConfigurationError
/// for anything outside [kMinN, kMaxN] or an empty / reversed range.
std::vector<int> parse_n_values(const std::string& text);

/// Linear value of a LogReal, or "underflow" / "overflow" when it does not fit
/// a double.
table::Cell linear_cell(const numerics::LogReal& x);

table::Table constants_table(const std::vector<int>& n_values, constants::PalKind kind);

struct ScanSummary {
  int n_first = 0, n_last = 0;
  int violations = 0;
  int first_violation = 0;  // 0 when none
  double min_ratio = 0;
  int argmin = 0;
  double ratio_at_last = 0;
};
/// A_n > B_n for every n in [n_first, n_last]; per-n ratios go to `rows` when given.
ScanSummary scan_ab(int n_first, int n_last, constants::PalKind kind, std::vector<double>* rows = nullptr);
table::Table scan_summary_table(const ScanSummary& s);

table::Table asymptotics_table(const std::vector<int>& n_values, asymptotics::Quantity quantity, constants::PalKind kind);
table::Table thresholds_table(int n_max, constants::PalKind kind);

/// Runs one command line (args[0] is the program name). Output goes to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperarea::cli
