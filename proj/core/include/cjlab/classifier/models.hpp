#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjlab/classifier/dataset.hpp"

namespace cjlab::classifier {

enum class ModelKind {
  LogisticRegression,
  LinearDiscriminant,
  KNearest,
  SupportVector,
  RandomForest,
};

enum class DistanceMetric { Euclidean, Manhattan };

std::string model_name(ModelKind kind);                   // "lr", "lda", ...
std::optional<ModelKind> parse_model_name(std::string_view name);

struct Hyperparams {
  // logistic regression: softmax + L2, plain gradient descent
  double lr_lambda = 1e-4;
  double lr_step = 0.5;
  int lr_max_iters = 5000;
  double lr_tol = 1e-8;
  // linear discriminant analysis
  double lda_ridge_factor = 1e-6;  // eps = factor * trace / d
  // k-nearest neighbours
  int knn_k = 3;
  DistanceMetric knn_metric = DistanceMetric::Euclidean;
  // linear one-vs-rest SVM, subgradient descent on hinge loss
  double svm_c = 1.0;
  int svm_iters = 2000;
  double svm_step = 0.1;
  // random forest
  int rf_trees = 100;
  int rf_max_depth = 0;  // 0 = unlimited
  std::uint64_t seed = 0;
};

/// A fitted classifier. Immutable after training; predict is const and
/// deterministic, so instances are safe to share across threads.
class Model {
 public:
  virtual ~Model() = default;
  virtual int predict(std::span<const double> sample) const = 0;
  virtual std::string name() const = 0;
  std::size_t input_width() const { return width_; }

 protected:
  void check_width(std::span<const double> sample) const;
  std::size_t width_ = 0;
};

/// Trains one model on an already-standardized dataset. Deterministic given
/// `params.seed`. Throws std::invalid_argument for datasets that fail
/// validate().
std::unique_ptr<Model> train(ModelKind kind, const Dataset& data,
                             const Hyperparams& params);

/// Logistic-regression specific entry point exposing the loss trajectory
/// (one value per gradient step, regularization included).
std::unique_ptr<Model> train_logistic(const Dataset& data,
                                      const Hyperparams& params,
                                      std::vector<double>* loss_history);

}  // namespace cjlab::classifier
