#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace coulombz::cli {

/// Column-oriented numeric table; every row has one value per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Free-form provenance written only to JSON output.
  std::vector<std::pair<std::string, double>> metadata;

  void add_row(std::vector<double> row);
};

/// Round-trip formatting ("%.17g"); negative zero prints as 0.
std::string format_number(double v);

void write_csv(std::ostream& out, const Table& t);
void write_json(std::ostream& out, const Table& t);

}  // namespace coulombz::cli
