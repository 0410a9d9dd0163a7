#include "csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace specdiff::cli {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc{} && result.ptr == end;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_number = 0;
  bool saw_data = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const auto cells = split(line);

    if (!saw_data) {
      bool numeric = true;
      double ignored;
      for (const auto& cell : cells) numeric = numeric && parse_double(cell, ignored);
      if (!numeric && table.header.empty() && table.columns.empty()) {
        table.header = cells;
        continue;
      }
    }

    if (table.columns.empty()) {
      if (!table.header.empty() && table.header.size() != cells.size())
        throw csv_parse_error("csv: header and data widths differ");
      table.columns.resize(cells.size());
    } else if (cells.size() != table.columns.size()) {
      throw csv_parse_error("csv: ragged row at line " + std::to_string(line_number));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      double value;
      if (!parse_double(cells[c], value))
        throw csv_parse_error("csv: non-numeric cell '" + cells[c] + "' at line " +
                              std::to_string(line_number));
      table.columns[c].push_back(value);
    }
    saw_data = true;
  }
  if (!saw_data) throw csv_parse_error("csv: no data rows");
  return table;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (!header.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c)
      out << (c ? "," : "") << header[c];
    out << "\n";
  }
  if (columns.empty()) return;
  const std::size_t rows = columns.front().size();
  char buf[64];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", columns[c][r]);
      out << (c ? "," : "") << buf;
    }
    out << "\n";
  }
}

}  // namespace specdiff::cli
