#include "hyperarea/table.hpp"

#include "hyperarea/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hyperarea::table {

namespace {

using Json = nlohmann::ordered_json;

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, std::uint64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) return format_number(v);
        else return quote_csv(v);
      },
      c);
}

std::string json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "null";
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, std::uint64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>)
          return std::isfinite(v) ? format_number(v) : Json(format_number(v)).dump();
        else return Json(v).dump();
      },
      c);
}

std::string pretty_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "-";
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, std::uint64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>) return format_short(v);
        else return v;
      },
      c);
}

// Unquoted csv token: null, bool, integer or double.
Cell parse_bare(const std::string& s, int line) {
  if (s.empty()) return std::monostate{};
  if (s == "true") return true;
  if (s == "false") return false;
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  const bool floating = s.find_first_of(".eE") != std::string::npos;
  try {
    size_t used = 0;
    if (floating) {
      const double d = std::stod(s, &used);
      if (used == s.size()) return d;
    } else {
      if (s[0] != '-' && s.size() >= 19) {
        const unsigned long long u = std::stoull(s, &used);
        if (used == s.size()) {
          if (u > static_cast<unsigned long long>(std::numeric_limits<std::int64_t>::max()))
            return static_cast<std::uint64_t>(u);
          return static_cast<std::int64_t>(u);
        }
      } else {
        const long long i = std::stoll(s, &used);
        if (used == s.size()) return static_cast<std::int64_t>(i);
      }
    }
  } catch (const std::exception&) {
  }
  throw ConfigurationError("csv line " + std::to_string(line) + ": bad value '" + s + "'");
}

std::vector<Cell> split_csv(const std::string& text, int line) {
  std::vector<Cell> out;
  size_t i = 0;
  while (true) {
    if (i < text.size() && text[i] == '"') {
      std::string s;
      ++i;
      while (true) {
        if (i >= text.size()) throw ConfigurationError("csv line " + std::to_string(line) + ": unterminated quote");
        if (text[i] == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            s += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        s += text[i++];
      }
      out.emplace_back(std::move(s));
    } else {
      const size_t end = std::min(text.find(',', i), text.size());
      out.push_back(parse_bare(text.substr(i, end - i), line));
      i = end;
    }
    if (i >= text.size()) break;
    if (text[i] != ',') throw ConfigurationError("csv line " + std::to_string(line) + ": expected ','");
    ++i;
  }
  return out;
}

Cell from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return u;
    return static_cast<std::int64_t>(u);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw ConfigurationError("json-lines: unsupported value " + j.dump());
}

void check_version(const Cell& c) {
  if (is_null(c) || as_int(c) != kSchemaVersion)
    throw ConfigurationError("unsupported schema_version " + as_string(c) + ", expected " + std::to_string(kSchemaVersion));
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw ConfigurationError("table " + name + ": row has " + std::to_string(row.size()) + " cells for " +
                             std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

size_t Table::column(std::string_view key) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == key) return i;
  throw ConfigurationError("table " + name + " has no column '" + std::string(key) + "'");
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::csv: return "csv";
    case Format::json_lines: return "json-lines";
    case Format::pretty: return "pretty";
  }
  return "csv";
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json-lines" || name == "json_lines") return Format::json_lines;
  if (name == "pretty") return Format::pretty;
  throw ConfigurationError("unknown format '" + std::string(name) + "' (csv, json-lines, pretty)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  // keep doubles distinguishable from integers on read-back
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string format_short(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write(std::ostream& out, const Table& t, Format format) {
  switch (format) {
    case Format::csv: {
      out << "schema_version";
      for (const auto& c : t.columns) out << ',' << c;
      out << '\n';
      for (const auto& row : t.rows) {
        out << kSchemaVersion;
        for (const auto& cell : row) out << ',' << csv_cell(cell);
        out << '\n';
      }
      return;
    }
    case Format::json_lines: {
      for (const auto& row : t.rows) {
        out << "{\"schema_version\":" << kSchemaVersion << ",\"table\":" << Json(t.name).dump();
        for (size_t i = 0; i < row.size(); ++i) out << ',' << Json(t.columns[i]).dump() << ':' << json_cell(row[i]);
        out << "}\n";
      }
      return;
    }
    case Format::pretty: {
      std::vector<std::vector<std::string>> text;
      std::vector<size_t> widths;
      for (const auto& c : t.columns) widths.push_back(c.size());
      for (const auto& row : t.rows) {
        auto& line = text.emplace_back();
        for (size_t i = 0; i < row.size(); ++i) {
          line.push_back(pretty_cell(row[i]));
          widths[i] = std::max(widths[i], line.back().size());
        }
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (size_t i = 0; i < cells.size(); ++i) {
          if (i) line += "  ";
          line += cells[i];
          if (i + 1 < cells.size()) line.append(widths[i] - cells[i].size(), ' ');
        }
        out << line << '\n';
      };
      emit(t.columns);
      size_t total = 0;
      for (size_t w : widths) total += w;
      out << std::string(total + 2 * (widths.empty() ? 0 : widths.size() - 1), '-') << '\n';
      for (const auto& line : text) emit(line);
      return;
    }
  }
}

std::string to_string(const Table& t, Format format) {
  std::ostringstream out;
  write(out, t, format);
  return out.str();
}

Table read(std::istream& in, Format format) {
  Table t;
  std::string line;
  int number = 0;
  switch (format) {
    case Format::csv: {
      if (!std::getline(in, line)) return t;
      ++number;
      std::stringstream header(line);
      std::string name;
      std::getline(header, name, ',');
      if (name != "schema_version") throw ConfigurationError("csv: first column must be schema_version");
      while (std::getline(header, name, ',')) t.columns.push_back(name);
      while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        auto cells = split_csv(line, number);
        if (cells.size() != t.columns.size() + 1)
          throw ConfigurationError("csv line " + std::to_string(number) + ": wrong number of cells");
        check_version(cells.front());
        cells.erase(cells.begin());
        t.rows.push_back(std::move(cells));
      }
      return t;
    }
    case Format::json_lines: {
      while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        Json j;
        try {
          j = Json::parse(line);
        } catch (const Json::exception& e) {
          throw ConfigurationError("json-lines line " + std::to_string(number) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("schema_version") || !j.contains("table"))
          throw ConfigurationError("json-lines line " + std::to_string(number) + ": missing schema_version or table");
        check_version(from_json(j["schema_version"]));
        std::vector<std::string> keys;
        std::vector<Cell> cells;
        const std::string name = j["table"].get<std::string>();
        if (t.columns.empty()) {
          t.name = name;
          for (const auto& item : j.items())
            if (item.key() != "schema_version" && item.key() != "table") t.columns.push_back(item.key());
        }
        if (name != t.name) throw ConfigurationError("json-lines line " + std::to_string(number) + ": mixed tables");
        if (j.size() != t.columns.size() + 2)
          throw ConfigurationError("json-lines line " + std::to_string(number) + ": wrong number of fields");
        for (const auto& c : t.columns) {
          if (!j.contains(c)) throw ConfigurationError("json-lines line " + std::to_string(number) + ": missing " + c);
          cells.push_back(from_json(j[c]));
        }
        t.rows.push_back(std::move(cells));
      }
      return t;
    }
    case Format::pretty:
      throw ConfigurationError("the pretty format is not machine-readable");
  }
  return t;
}

double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  if (const auto* s = std::get_if<std::string>(&c)) {
    if (*s == "inf") return std::numeric_limits<double>::infinity();
    if (*s == "-inf") return -std::numeric_limits<double>::infinity();
    if (*s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ConfigurationError("cell is not a number");
}

std::int64_t as_int(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  throw ConfigurationError("cell is not an integer");
}

std::uint64_t as_uint(const Cell& c) {
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return *u;
  if (const auto* i = std::get_if<std::int64_t>(&c); i && *i >= 0) return static_cast<std::uint64_t>(*i);
  throw ConfigurationError("cell is not a non-negative integer");
}

bool as_bool(const Cell& c) {
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  throw ConfigurationError("cell is not a boolean");
}

std::string as_string(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (is_null(c)) return "";
  return csv_cell(c);
}

bool is_null(const Cell& c) { return std::holds_alternative<std::monostate>(c); }

}  // namespace hyperarea::table
