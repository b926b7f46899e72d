#pragma once

#include <string>
#include <vector>

namespace infomax::csv {

/// Formats a double with enough digits to round-trip exactly.
std::string format(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with a header line. Throws on empty files or rows
/// whose width or content does not match the header.
Table read(const std::string& path);

void write(const std::string& path, const Table& table);

}  // namespace infomax::csv
