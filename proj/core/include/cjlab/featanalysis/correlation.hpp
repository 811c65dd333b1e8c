#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cjlab::featanalysis {

/// Pearson correlation coefficient Cov(X,Y)/sqrt(Var(X)Var(Y)).
/// Returns nullopt when either series has zero variance (the coefficient is
/// undefined, it is never reported as 0). Throws std::invalid_argument on a
/// length mismatch or fewer than two points.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

/// Square symmetric matrix of pairwise feature correlations. Cells are
/// nullopt wherever a zero-variance feature makes the coefficient undefined.
struct CorrelationMatrix {
  std::vector<std::string> feature_names;
  std::vector<std::vector<std::optional<double>>> cells;

  std::size_t size() const { return feature_names.size(); }
};

/// Pairwise correlation over the feature columns of `rows` (sample-major).
/// Requires at least two rows and uniform width.
CorrelationMatrix correlation_matrix(
    const std::vector<std::vector<double>>& rows,
    std::vector<std::string> feature_names);

/// Mean of one feature's correlation row. The diagonal participates (its
/// value is 1 where defined) and undefined cells are skipped. Returns
/// nullopt when every cell in the row is undefined.
std::optional<double> row_mean(const CorrelationMatrix& m, std::size_t k);

/// Features whose in-class correlation separates the first class from the
/// other two: keep feature k when both (C_m[k] - M_m[k]) and (C_m[k] - B_m[k])
/// strictly exceed (M_m[k] - B_m[k]). Output preserves feature order.
/// Throws std::invalid_argument when the three matrices disagree on names.
std::vector<std::string> significant_features(const CorrelationMatrix& crypto,
                                              const CorrelationMatrix& mal,
                                              const CorrelationMatrix& benign);

}  // namespace cjlab::featanalysis
