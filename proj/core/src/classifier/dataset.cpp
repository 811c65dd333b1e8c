#include "cjlab/classifier/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace cjlab::classifier {

void Dataset::validate() const {
  if (samples.size() != labels.size()) {
    throw std::invalid_argument("dataset: samples/labels size mismatch");
  }
  if (samples.empty()) throw std::invalid_argument("dataset: empty");
  const std::size_t w = samples[0].size();
  if (w == 0) throw std::invalid_argument("dataset: zero-width samples");
  for (const auto& s : samples) {
    if (s.size() != w) throw std::invalid_argument("dataset: ragged samples");
  }
  std::unordered_set<int> seen;
  for (int label : labels) {
    if (label < 0 || label >= static_cast<int>(class_names.size())) {
      throw std::invalid_argument("dataset: label out of range");
    }
    seen.insert(label);
  }
  if (seen.size() < 2) {
    throw std::invalid_argument("dataset: need at least two classes");
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.class_names = class_names;
  out.samples.reserve(indices.size());
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) {
    out.samples.push_back(samples.at(i));
    out.labels.push_back(labels.at(i));
  }
  return out;
}

void Standardizer::fit(const std::vector<std::vector<double>>& samples) {
  if (samples.empty()) throw std::invalid_argument("standardizer: no samples");
  const std::size_t w = samples[0].size();
  mean_.assign(w, 0.0);
  scale_.assign(w, 0.0);
  for (const auto& s : samples) {
    for (std::size_t j = 0; j < w; ++j) mean_[j] += s[j];
  }
  const double n = static_cast<double>(samples.size());
  for (double& m : mean_) m /= n;
  for (const auto& s : samples) {
    for (std::size_t j = 0; j < w; ++j) {
      const double d = s[j] - mean_[j];
      scale_[j] += d * d;
    }
  }
  for (double& v : scale_) v = std::sqrt(v / n);
}

std::vector<double> Standardizer::transform(
    std::span<const double> sample) const {
  if (sample.size() != mean_.size()) {
    throw std::invalid_argument("standardizer: width mismatch");
  }
  std::vector<double> out(sample.size());
  for (std::size_t j = 0; j < sample.size(); ++j) {
    out[j] = scale_[j] > 0.0 ? (sample[j] - mean_[j]) / scale_[j] : 0.0;
  }
  return out;
}

std::vector<std::vector<double>> Standardizer::transform_all(
    const std::vector<std::vector<double>>& samples) const {
  std::vector<std::vector<double>> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(transform(s));
  return out;
}

}  // namespace cjlab::classifier
