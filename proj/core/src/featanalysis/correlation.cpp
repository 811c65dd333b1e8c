#include "cjlab/featanalysis/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace cjlab::featanalysis {

std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("pearson: series lengths differ");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("pearson: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix correlation_matrix(
    const std::vector<std::vector<double>>& rows,
    std::vector<std::string> feature_names) {
  if (rows.size() < 2) {
    throw std::invalid_argument("correlation_matrix: need at least two rows");
  }
  const std::size_t width = feature_names.size();
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw std::invalid_argument("correlation_matrix: ragged row");
    }
  }

  std::vector<std::vector<double>> columns(width,
                                           std::vector<double>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) columns[c][r] = rows[r][c];
  }

  CorrelationMatrix m;
  m.feature_names = std::move(feature_names);
  m.cells.assign(width, std::vector<std::optional<double>>(width));
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t j = i; j < width; ++j) {
      auto rho = pearson(columns[i], columns[j]);
      m.cells[i][j] = rho;
      m.cells[j][i] = rho;
    }
  }
  return m;
}

std::optional<double> row_mean(const CorrelationMatrix& m, std::size_t k) {
  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& cell : m.cells[k]) {
    if (cell) {
      sum += *cell;
      ++defined;
    }
  }
  if (defined == 0) return std::nullopt;
  return sum / static_cast<double>(defined);
}

std::vector<std::string> significant_features(const CorrelationMatrix& crypto,
                                              const CorrelationMatrix& mal,
                                              const CorrelationMatrix& benign) {
  if (crypto.feature_names != mal.feature_names ||
      crypto.feature_names != benign.feature_names) {
    throw std::invalid_argument(
        "significant_features: feature names disagree");
  }
  std::vector<std::string> selected;
  for (std::size_t k = 0; k < crypto.size(); ++k) {
    auto cm = row_mean(crypto, k);
    auto mm = row_mean(mal, k);
    auto bm = row_mean(benign, k);
    if (!cm || !mm || !bm) continue;
    const double baseline = *mm - *bm;
    if (*cm - *mm > baseline && *cm - *bm > baseline) {
      selected.push_back(crypto.feature_names[k]);
    }
  }
  return selected;
}

}  // namespace cjlab::featanalysis
