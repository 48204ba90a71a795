#pragma once

// Tabular reports rendered as JSON, RFC-4180 CSV or an aligned text table.

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace diskt::cli {

using Cell = std::variant<std::monostate, std::string, double, long>;

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest text that round-trips; empty for missing or non-finite values.
inline std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
  if (std::holds_alternative<double>(c)) {
    const double x = std::get<double>(c);
    if (!std::isfinite(x)) return "";
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
  }
  return "";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline void write_csv(std::ostream& os, const Report& r) {
  auto line = [&os](const auto& cells, auto text) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(text(cells[i]));
    os << "\r\n";
  };
  line(r.columns, [](const std::string& s) { return s; });
  for (const auto& row : r.rows) line(row, cell_text);
}

inline void write_json(std::ostream& os, const Report& r) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      const Cell& c = row[i];
      auto& slot = obj[r.columns[i]];
      if (std::holds_alternative<std::string>(c))
        slot = std::get<std::string>(c);
      else if (std::holds_alternative<long>(c))
        slot = std::get<long>(c);
      else if (std::holds_alternative<double>(c) && std::isfinite(std::get<double>(c)))
        slot = std::get<double>(c);
      else
        slot = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

/// Display width in code points, so UTF-8 text lines up.
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

inline void write_table(std::ostream& os, const Report& r) {
  std::vector<std::size_t> w(r.columns.size());
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = display_width(r.columns[i]);
  for (const auto& row : r.rows) {
    auto& t = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      t.push_back(cell_text(row[i]));
      if (t.back().empty()) t.back() = "-";
      w[i] = std::max(w[i], display_width(t.back()));
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(w[i] - display_width(cells[i]) + 2, ' ');
    }
    os << '\n';
  };
  line(r.columns);
  for (const auto& t : text) line(t);
}

inline void write(std::ostream& os, const Report& r, const std::string& format) {
  if (format == "json")
    write_json(os, r);
  else if (format == "csv")
    write_csv(os, r);
  else
    write_table(os, r);
}

}  // namespace diskt::cli
