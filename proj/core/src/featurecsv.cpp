#include "cjlab/featurecsv.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cjlab {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string feature_csv_header() {
  std::string h = "path,label";
  for (auto name : jsmetrics::kFeatureNames) {
    h += ',';
    h += name;
  }
  return h;
}

std::string feature_csv_row(const FeatureRow& row) {
  std::string line = row.path + "," + row.label;
  for (double v : row.values) {
    line += ',';
    line += format_number(v);
  }
  return line;
}

void write_feature_csv(std::ostream& os, const FeatureTable& table) {
  os << feature_csv_header() << '\n';
  for (const FeatureRow& row : table.rows) {
    os << feature_csv_row(row) << '\n';
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else if (c != '\r') {
      cell.push_back(c);
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

FeatureTable read_feature_csv(std::istream& is) {
  FeatureTable table;
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error("feature csv: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != feature_csv_header()) {
    throw std::runtime_error("feature csv: unexpected header: " + line);
  }
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 19) {
      throw std::runtime_error("feature csv: line " + std::to_string(lineno) +
                               ": expected 19 cells, got " +
                               std::to_string(cells.size()));
    }
    FeatureRow row;
    row.path = cells[0];
    row.label = cells[1];
    for (std::size_t i = 0; i < 17; ++i) {
      try {
        row.values[i] = std::stod(cells[i + 2]);
      } catch (const std::exception&) {
        throw std::runtime_error("feature csv: line " +
                                 std::to_string(lineno) +
                                 ": bad number in column " +
                                 std::string(jsmetrics::kFeatureNames[i]));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> FeatureTable::labels_in_order() const {
  std::vector<std::string> order;
  for (const FeatureRow& row : rows) {
    if (std::find(order.begin(), order.end(), row.label) == order.end()) {
      order.push_back(row.label);
    }
  }
  return order;
}

}  // namespace cjlab
