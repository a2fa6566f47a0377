#pragma once

// Deterministic CSV emission: mandatory header row, '.' decimal point,
// 17 significant digits so tables are reproducible bit-for-bit.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "fracwave/common.hpp"

namespace fracwave {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) throw IoError("csv: row width mismatch");
    rows_.push_back(std::move(cells));
  }

  void add_row(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_number(v));
    add_row(std::move(s));
  }

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("csv: cannot open " + path);
    for (std::size_t c = 0; c < columns_.size(); ++c)
      out << (c ? "," : "") << columns_[c];
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << "\n";
    }
    if (!out) throw IoError("csv: write failed for " + path);
  }

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace fracwave
