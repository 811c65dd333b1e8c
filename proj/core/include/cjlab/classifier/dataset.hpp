#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cjlab::classifier {

struct Dataset {
  std::vector<std::vector<double>> samples;
  std::vector<int> labels;  // indices into class_names
  std::vector<std::string> class_names;

  std::size_t size() const { return samples.size(); }
  std::size_t width() const { return samples.empty() ? 0 : samples[0].size(); }

  /// Throws std::invalid_argument on size mismatch, ragged rows, fewer than
  /// two classes, or out-of-range labels.
  void validate() const;

  Dataset subset(std::span<const std::size_t> indices) const;
};

/// Per-feature zero-mean unit-variance scaling. Fit on the training split
/// only; zero-variance features map to 0 so no NaN can escape.
class Standardizer {
 public:
  void fit(const std::vector<std::vector<double>>& samples);
  std::vector<double> transform(std::span<const double> sample) const;
  std::vector<std::vector<double>> transform_all(
      const std::vector<std::vector<double>>& samples) const;

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;  // 0 marks a constant feature
};

}  // namespace cjlab::classifier
