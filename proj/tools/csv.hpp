#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace specdiff::cli {

class csv_parse_error : public std::runtime_error {
public:
  explicit csv_parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Comma-separated numeric table. An optional first line of non-numeric
/// cells is kept as the header. All rows must have the same width.
struct CsvTable {
  std::vector<std::string> header;             // empty when headerless
  std::vector<std::vector<double>> columns;    // column-major

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  std::size_t cols() const { return columns.size(); }
};

CsvTable read_csv(std::istream& in);

/// Writes columns at 17 significant digits (lossless double round-trip).
/// The header line is omitted when `header` is empty.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace specdiff::cli
