// Copyright 2026 The mbcoherence Authors
// SPDX-License-Identifier: Apache-2.0

// Deterministic tabular output: CSV with fixed 12-significant-digit floats
// (locale independent via to_chars) and a JSON mirror of the same rows.

#pragma once

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mbctool {

using Cell = std::variant<double, std::int64_t, std::string>;

inline std::string format_double(double value, int digits = 12) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, digits);
  return std::string(buf, ptr);
}

inline std::string format_cell(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  return std::get<std::string>(cell);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_cell(row[c]);
    }
    out << '\n';
  }
}

inline void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& cell = row[c];
      if (std::holds_alternative<double>(cell)) {
        obj[table.columns[c]] = std::get<double>(cell);
      } else if (std::holds_alternative<std::int64_t>(cell)) {
        obj[table.columns[c]] = std::get<std::int64_t>(cell);
      } else {
        obj[table.columns[c]] = std::get<std::string>(cell);
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

}  // namespace mbctool
