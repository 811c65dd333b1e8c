#include "cjlab/classifier/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace cjlab::classifier {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

Split stratified_split(const Dataset& data, double train_fraction,
                       std::mt19937_64& rng) {
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < data.size(); ++i) {
    by_class[data.labels[i]].push_back(i);
  }
  Split split;
  for (auto& [label, indices] : by_class) {
    std::shuffle(indices.begin(), indices.end(), rng);
    const auto n = indices.size();
    auto train_n = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(n)));
    train_n = std::clamp<std::size_t>(train_n, 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      (i < train_n ? split.train : split.test).push_back(indices[i]);
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

struct RepScores {
  std::vector<MacroScores> per_model;
};

RepScores run_repetition(const Dataset& data,
                         const std::vector<ModelKind>& kinds,
                         const Hyperparams& base_params,
                         const EvalProtocol& protocol, int rep) {
  std::mt19937_64 rng(mix(protocol.seed, static_cast<std::uint64_t>(rep)));
  Split split = stratified_split(data, protocol.train_fraction, rng);

  Dataset train_set = data.subset(split.train);
  Dataset test_set = data.subset(split.test);

  Standardizer scaler;
  scaler.fit(train_set.samples);
  train_set.samples = scaler.transform_all(train_set.samples);
  test_set.samples = scaler.transform_all(test_set.samples);

  Hyperparams params = base_params;
  params.seed = mix(base_params.seed, 0xC0FFEEull + rep);

  RepScores out;
  for (ModelKind kind : kinds) {
    auto model = train(kind, train_set, params);
    std::vector<int> predicted;
    predicted.reserve(test_set.size());
    for (const auto& sample : test_set.samples) {
      predicted.push_back(model->predict(sample));
    }
    out.per_model.push_back(
        macro_scores(test_set.labels, predicted,
                     static_cast<int>(data.class_names.size())));
  }
  return out;
}

}  // namespace

MacroScores macro_scores(std::span<const int> truth,
                         std::span<const int> predicted, int class_count) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("macro_scores: length mismatch");
  }
  std::vector<std::size_t> tp(class_count, 0), fp(class_count, 0),
      fn(class_count, 0), support(class_count, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ++support[truth[i]];
    if (truth[i] == predicted[i]) {
      ++tp[truth[i]];
    } else {
      ++fp[predicted[i]];
      ++fn[truth[i]];
    }
  }
  MacroScores macro;
  int present = 0;
  for (int c = 0; c < class_count; ++c) {
    if (support[c] == 0) continue;  // class absent from the truth
    ++present;
    const double denom_p = static_cast<double>(tp[c] + fp[c]);
    const double denom_r = static_cast<double>(tp[c] + fn[c]);
    const double precision = denom_p > 0 ? tp[c] / denom_p : 0.0;
    const double recall = denom_r > 0 ? tp[c] / denom_r : 0.0;
    const double f1 = precision + recall > 0
                          ? 2.0 * precision * recall / (precision + recall)
                          : 0.0;
    macro.precision += precision;
    macro.recall += recall;
    macro.f1 += f1;
  }
  if (present > 0) {
    macro.precision /= present;
    macro.recall /= present;
    macro.f1 /= present;
  }
  return macro;
}

EvaluationReport evaluate(const Dataset& data,
                          const std::vector<ModelKind>& kinds,
                          const Hyperparams& params,
                          const EvalProtocol& protocol) {
  data.validate();
  if (kinds.empty()) throw std::invalid_argument("evaluate: no models");
  if (protocol.repetitions < 1) {
    throw std::invalid_argument("evaluate: repetitions must be >= 1");
  }
  if (protocol.train_fraction <= 0.0 || protocol.train_fraction >= 1.0) {
    throw std::invalid_argument("evaluate: split must be in (0, 1)");
  }
  std::map<int, std::size_t> class_sizes;
  for (int label : data.labels) ++class_sizes[label];
  for (const auto& [label, count] : class_sizes) {
    if (count < 2) {
      throw std::invalid_argument("evaluate: class '" +
                                  data.class_names[label] +
                                  "' has fewer than two samples");
    }
  }

  std::vector<RepScores> reps(protocol.repetitions);
  const int jobs = std::max(1, protocol.jobs);
  if (jobs == 1) {
    for (int r = 0; r < protocol.repetitions; ++r) {
      reps[r] = run_repetition(data, kinds, params, protocol, r);
    }
  } else {
    std::vector<std::thread> workers;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (int r = next.fetch_add(1); r < protocol.repetitions;
             r = next.fetch_add(1)) {
          reps[r] = run_repetition(data, kinds, params, protocol, r);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  EvaluationReport report;
  report.repetitions = protocol.repetitions;
  report.train_fraction = protocol.train_fraction;
  report.seed = protocol.seed;
  for (std::size_t m = 0; m < kinds.size(); ++m) {
    ModelScore score;
    score.kind = kinds[m];
    for (const RepScores& rep : reps) {
      score.precision += rep.per_model[m].precision;
      score.recall += rep.per_model[m].recall;
      score.f1 += rep.per_model[m].f1;
    }
    score.precision /= protocol.repetitions;
    score.recall /= protocol.repetitions;
    score.f1 /= protocol.repetitions;
    report.scores.push_back(score);
  }
  return report;
}

}  // namespace cjlab::classifier
