#pragma once

// Typed rows and their csv / json-lines / pretty renderings. Machine formats
// carry a schema_version column and numbers with 17 significant digits, so a
// written table reads back to the same cells.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hyperarea::table {

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::string name;  // written as the `table` field of json lines
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  /// Index of a column; throws ConfigurationError when absent.
  size_t column(std::string_view name) const;
};

enum class Format { csv, json_lines, pretty };
std::string_view to_string(Format format);
/// Accepts csv, json-lines (or json_lines) and pretty.
Format parse_format(std::string_view name);

/// %.17g, with inf and nan spelled out.
std::string format_number(double x);
/// %.6g for the pretty format.
std::string format_short(double x);

void write(std::ostream& out, const Table& table, Format format);
std::string to_string(const Table& table, Format format);

/// Reads csv or json-lines output of `write`. Throws ConfigurationError on
/// malformed input, a schema mismatch or the pretty format.
Table read(std::istream& in, Format format);

/// Cell accessors; numbers accept either stored kind.
double as_double(const Cell& cell);
std::int64_t as_int(const Cell& cell);
std::uint64_t as_uint(const Cell& cell);
bool as_bool(const Cell& cell);
std::string as_string(const Cell& cell);
bool is_null(const Cell& cell);

}  // namespace hyperarea::table
