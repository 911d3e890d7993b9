#include "twbeam/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twbeam {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvWriter::add_comment(const std::string& line) {
  comments_.push_back("# " + line);
}

void CsvWriter::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size())
    throw std::invalid_argument("CsvWriter: row width mismatch");
  for (double v : row)
    if (!std::isfinite(v))
      throw std::invalid_argument("CsvWriter: non-finite value");
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double v : row) cells.push_back(format_double(v));
  rows_.push_back(std::move(cells));
}

void CsvWriter::add_row(const std::vector<std::string>& row) {
  if (row.size() != header_.size())
    throw std::invalid_argument("CsvWriter: row width mismatch");
  rows_.push_back(row);
}

std::string CsvWriter::str() const {
  std::ostringstream out;
  for (const auto& c : comments_) out << c << "\n";
  for (std::size_t i = 0; i < header_.size(); ++i)
    out << header_[i] << (i + 1 < header_.size() ? "," : "\n");
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? "," : "\n");
  }
  return out.str();
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
  f << str();
  if (!f) throw std::runtime_error("CsvWriter: write failed for " + path);
}

}  // namespace twbeam
