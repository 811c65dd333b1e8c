#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cjlab/jsmetrics/metrics.hpp"

// The on-disk feature table: one row per analyzed file, columns
// path,label,M,M_d,B,D,E,c_l,T,eta,V,eta1,n1,eta2,n2,params,sloc,physical,M_s

namespace cjlab {

struct FeatureRow {
  std::string path;
  std::string label;
  std::array<double, 17> values{};
};

struct FeatureTable {
  std::vector<FeatureRow> rows;

  std::vector<std::string> labels_in_order() const;  // distinct, first-seen
};

std::string feature_csv_header();
std::string feature_csv_row(const FeatureRow& row);

/// Deterministic shortest-roundtrip-ish formatting used across all CSV and
/// JSON emitters ("%.12g").
std::string format_number(double v);

void write_feature_csv(std::ostream& os, const FeatureTable& table);

/// Throws std::runtime_error on a malformed header or row.
FeatureTable read_feature_csv(std::istream& is);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace cjlab
