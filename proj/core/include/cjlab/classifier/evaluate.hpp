#pragma once

#include <cstdint>
#include <vector>

#include "cjlab/classifier/models.hpp"

namespace cjlab::classifier {

struct EvalProtocol {
  double train_fraction = 0.75;
  int repetitions = 20;
  std::uint64_t seed = 0;
  int jobs = 1;  // repetitions run in parallel, merged by repetition index
};

struct ModelScore {
  ModelKind kind;
  double precision = 0.0;  // macro, averaged over repetitions
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvaluationReport {
  std::vector<ModelScore> scores;
  int repetitions = 0;
  double train_fraction = 0.75;
  std::uint64_t seed = 0;
};

struct MacroScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Macro precision/recall/F1 of a prediction vector (per-class scores with
/// 0/0 taken as 0, then averaged over classes present in the truth).
MacroScores macro_scores(std::span<const int> truth,
                         std::span<const int> predicted, int class_count);

/// Repeated stratified holdout: per repetition draw a 75/25 split (per
/// class), standardize on the training statistics, fit every requested
/// model and score the held-out quarter; scores are averaged over
/// repetitions. Throws std::invalid_argument when a class has fewer than
/// two samples (the message names the class).
EvaluationReport evaluate(const Dataset& data,
                          const std::vector<ModelKind>& kinds,
                          const Hyperparams& params,
                          const EvalProtocol& protocol);

}  // namespace cjlab::classifier
