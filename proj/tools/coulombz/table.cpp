#include "coulombz/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace coulombz::cli {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  for (double v : row) {
    if (!std::isfinite(v)) throw std::runtime_error("non-finite value in table");
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i] == 0.0 ? 0.0 : row[i];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  auto meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  out << doc.dump(2) << '\n';
}

}  // namespace coulombz::cli
