#pragma once

#include <string>
#include <vector>

namespace twbeam {

/// RFC-4180-style CSV with '.' decimal separator and full round-trip
/// precision (17 significant digits). Row order is the order given.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  /// Comment lines ("# key = value") placed before the header row.
  void add_comment(const std::string& line);
  void add_row(const std::vector<double>& row);
  void add_row(const std::vector<std::string>& row);

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Shortest-round-trip decimal formatting of a double.
std::string format_double(double value);

}  // namespace twbeam
