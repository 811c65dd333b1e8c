#include "cjlab/classifier/models.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cjlab::classifier {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int argmax_lowest(std::span<const double> scores) {
  int best = 0;
  for (int k = 1; k < static_cast<int>(scores.size()); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

// ---------------------------------------------------------------------------
// multinomial logistic regression

class LogisticModel final : public Model {
 public:
  LogisticModel(const Dataset& data, const Hyperparams& hp,
                std::vector<double>* loss_history) {
    width_ = data.width();
    classes_ = static_cast<int>(data.class_names.size());
    const std::size_t n = data.size();
    const std::size_t d = width_;
    weights_.assign(static_cast<std::size_t>(classes_) * (d + 1), 0.0);

    std::vector<double> probs(classes_);
    std::vector<double> grad(weights_.size());
    double prev_loss = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < hp.lr_max_iters; ++iter) {
      std::fill(grad.begin(), grad.end(), 0.0);
      double loss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        softmax(data.samples[i], probs);
        loss -= std::log(std::max(probs[data.labels[i]], 1e-300));
        for (int k = 0; k < classes_; ++k) {
          const double delta =
              probs[k] - (k == data.labels[i] ? 1.0 : 0.0);
          double* g = &grad[static_cast<std::size_t>(k) * (d + 1)];
          for (std::size_t j = 0; j < d; ++j) g[j] += delta * data.samples[i][j];
          g[d] += delta;
        }
      }
      loss /= static_cast<double>(n);
      // L2 on weights, not on the bias terms
      for (int k = 0; k < classes_; ++k) {
        const double* w = &weights_[static_cast<std::size_t>(k) * (d + 1)];
        for (std::size_t j = 0; j < d; ++j) {
          loss += 0.5 * hp.lr_lambda * w[j] * w[j];
        }
      }
      if (loss_history) loss_history->push_back(loss);

      const double scale = hp.lr_step / static_cast<double>(n);
      for (int k = 0; k < classes_; ++k) {
        double* w = &weights_[static_cast<std::size_t>(k) * (d + 1)];
        double* g = &grad[static_cast<std::size_t>(k) * (d + 1)];
        for (std::size_t j = 0; j < d; ++j) {
          w[j] -= scale * g[j] + hp.lr_step * hp.lr_lambda * w[j];
        }
        w[d] -= scale * g[d];
      }
      if (std::abs(prev_loss - loss) <
          hp.lr_tol * std::max(1.0, std::abs(prev_loss))) {
        break;
      }
      prev_loss = loss;
    }
  }

  int predict(std::span<const double> sample) const override {
    check_width(sample);
    std::vector<double> probs(classes_);
    softmax(sample, probs);
    return argmax_lowest(probs);
  }

  std::string name() const override { return "lr"; }

 private:
  template <typename Row>
  void softmax(const Row& x, std::vector<double>& probs) const {
    const std::size_t d = width_;
    double max_z = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < classes_; ++k) {
      const double* w = &weights_[static_cast<std::size_t>(k) * (d + 1)];
      double z = w[d];
      for (std::size_t j = 0; j < d; ++j) z += w[j] * x[j];
      probs[k] = z;
      max_z = std::max(max_z, z);
    }
    double sum = 0.0;
    for (double& p : probs) {
      p = std::exp(p - max_z);
      sum += p;
    }
    for (double& p : probs) p /= sum;
  }

  int classes_ = 0;
  std::vector<double> weights_;  // per class: d weights then a bias
};

// ---------------------------------------------------------------------------
// linear discriminant analysis, pooled covariance with a ridge

class LdaModel final : public Model {
 public:
  LdaModel(const Dataset& data, const Hyperparams& hp) {
    width_ = data.width();
    const int k_classes = static_cast<int>(data.class_names.size());
    const auto d = static_cast<Eigen::Index>(width_);
    const std::size_t n = data.size();

    std::vector<Eigen::VectorXd> means(k_classes, Eigen::VectorXd::Zero(d));
    std::vector<std::size_t> counts(k_classes, 0);
    for (std::size_t i = 0; i < n; ++i) {
      means[data.labels[i]] += Eigen::Map<const Eigen::VectorXd>(
          data.samples[i].data(), d);
      ++counts[data.labels[i]];
    }
    for (int k = 0; k < k_classes; ++k) {
      if (counts[k] > 0) means[k] /= static_cast<double>(counts[k]);
    }

    Eigen::MatrixXd pooled = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      Eigen::VectorXd centered =
          Eigen::Map<const Eigen::VectorXd>(data.samples[i].data(), d) -
          means[data.labels[i]];
      pooled.noalias() += centered * centered.transpose();
    }
    const double denom = std::max<double>(1.0, static_cast<double>(n) -
                                                   static_cast<double>(k_classes));
    pooled /= denom;
    const double eps = std::max(
        hp.lda_ridge_factor * pooled.trace() / static_cast<double>(d), 1e-12);
    pooled += eps * Eigen::MatrixXd::Identity(d, d);

    Eigen::LDLT<Eigen::MatrixXd> solver(pooled);
    directions_.resize(k_classes);
    offsets_.resize(k_classes);
    for (int k = 0; k < k_classes; ++k) {
      Eigen::VectorXd w = solver.solve(means[k]);
      directions_[k] = w;
      const double prior =
          counts[k] > 0 ? static_cast<double>(counts[k]) / static_cast<double>(n)
                        : 1e-12;
      offsets_[k] = -0.5 * means[k].dot(w) + std::log(prior);
    }
  }

  int predict(std::span<const double> sample) const override {
    check_width(sample);
    Eigen::Map<const Eigen::VectorXd> x(sample.data(),
                                        static_cast<Eigen::Index>(width_));
    std::vector<double> scores(directions_.size());
    for (std::size_t k = 0; k < directions_.size(); ++k) {
      scores[k] = directions_[k].dot(x) + offsets_[k];
    }
    return argmax_lowest(scores);
  }

  std::string name() const override { return "lda"; }

 private:
  std::vector<Eigen::VectorXd> directions_;
  std::vector<double> offsets_;
};

// ---------------------------------------------------------------------------
// k-nearest neighbours

class KnnModel final : public Model {
 public:
  KnnModel(const Dataset& data, const Hyperparams& hp)
      : train_(data.samples),
        labels_(data.labels),
        classes_(static_cast<int>(data.class_names.size())),
        k_(std::max(1, hp.knn_k)),
        metric_(hp.knn_metric) {
    width_ = data.width();
  }

  int predict(std::span<const double> sample) const override {
    check_width(sample);
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(train_.size());
    for (std::size_t i = 0; i < train_.size(); ++i) {
      dist.emplace_back(distance(train_[i], sample), i);
    }
    const std::size_t k = std::min<std::size_t>(k_, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
    std::vector<int> votes(classes_, 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[labels_[dist[i].second]];
    int best = 0;
    for (int c = 1; c < classes_; ++c) {
      if (votes[c] > votes[best]) best = c;  // ties keep the smallest id
    }
    return best;
  }

  std::string name() const override { return "knn"; }

 private:
  double distance(const std::vector<double>& a,
                  std::span<const double> b) const {
    double acc = 0.0;
    if (metric_ == DistanceMetric::Euclidean) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
      }
      return std::sqrt(acc);
    }
    for (std::size_t j = 0; j < a.size(); ++j) acc += std::abs(a[j] - b[j]);
    return acc;
  }

  std::vector<std::vector<double>> train_;
  std::vector<int> labels_;
  int classes_;
  std::size_t k_;
  DistanceMetric metric_;
};

// ---------------------------------------------------------------------------
// linear SVM, one-vs-rest, subgradient descent on the hinge loss

class SvmModel final : public Model {
 public:
  SvmModel(const Dataset& data, const Hyperparams& hp) {
    width_ = data.width();
    const int k_classes = static_cast<int>(data.class_names.size());
    const std::size_t n = data.size();
    const std::size_t d = width_;
    weights_.assign(static_cast<std::size_t>(k_classes) * (d + 1), 0.0);

    for (int k = 0; k < k_classes; ++k) {
      double* w = &weights_[static_cast<std::size_t>(k) * (d + 1)];
      for (int iter = 0; iter < hp.svm_iters; ++iter) {
        const double step = hp.svm_step / (1.0 + 0.01 * iter);
        std::vector<double> grad(d + 1, 0.0);
        for (std::size_t j = 0; j < d; ++j) grad[j] = w[j];
        for (std::size_t i = 0; i < n; ++i) {
          const double y = data.labels[i] == k ? 1.0 : -1.0;
          double margin = w[d];
          for (std::size_t j = 0; j < d; ++j) {
            margin += w[j] * data.samples[i][j];
          }
          if (y * margin < 1.0) {
            const double c = hp.svm_c / static_cast<double>(n);
            for (std::size_t j = 0; j < d; ++j) {
              grad[j] -= c * y * data.samples[i][j];
            }
            grad[d] -= c * y;
          }
        }
        for (std::size_t j = 0; j <= d; ++j) w[j] -= step * grad[j];
      }
    }
    classes_ = k_classes;
  }

  int predict(std::span<const double> sample) const override {
    check_width(sample);
    std::vector<double> scores(classes_);
    for (int k = 0; k < classes_; ++k) {
      const double* w = &weights_[static_cast<std::size_t>(k) * (width_ + 1)];
      double z = w[width_];
      for (std::size_t j = 0; j < width_; ++j) z += w[j] * sample[j];
      scores[k] = z;
    }
    return argmax_lowest(scores);
  }

  std::string name() const override { return "svm"; }

 private:
  int classes_ = 0;
  std::vector<double> weights_;
};

// ---------------------------------------------------------------------------
// random forest

struct TreeNode {
  int feature = -1;       // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int label = 0;
};

class DecisionTree {
 public:
  void fit(const Dataset& data, std::span<const std::size_t> indices,
           int classes, int max_depth, std::mt19937_64& rng) {
    classes_ = classes;
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    root_ = build(data, idx, max_depth == 0 ? -1 : max_depth, rng);
  }

  int predict(std::span<const double> x) const {
    int node = root_;
    while (nodes_[node].feature >= 0) {
      node = x[nodes_[node].feature] <= nodes_[node].threshold
                 ? nodes_[node].left
                 : nodes_[node].right;
    }
    return nodes_[node].label;
  }

 private:
  int majority(const Dataset& data, std::span<const std::size_t> idx) const {
    std::vector<int> counts(classes_, 0);
    for (std::size_t i : idx) ++counts[data.labels[i]];
    int best = 0;
    for (int c = 1; c < classes_; ++c) {
      if (counts[c] > counts[best]) best = c;
    }
    return best;
  }

  double gini(std::span<const int> counts, double total) const {
    double g = 1.0;
    for (int c : counts) {
      const double p = static_cast<double>(c) / total;
      g -= p * p;
    }
    return g;
  }

  int build(const Dataset& data, std::vector<std::size_t>& idx, int depth,
            std::mt19937_64& rng) {
    const int leaf_label = majority(data, idx);
    bool pure = true;
    for (std::size_t i : idx) {
      if (data.labels[i] != data.labels[idx[0]]) {
        pure = false;
        break;
      }
    }
    if (pure || idx.size() < 2 || depth == 0) {
      return make_leaf(leaf_label);
    }

    const std::size_t d = data.width();
    const auto subset =
        static_cast<std::size_t>(std::max(1.0, std::floor(std::sqrt(d))));
    std::vector<std::size_t> features(d);
    std::iota(features.begin(), features.end(), 0);
    for (std::size_t j = 0; j < subset; ++j) {
      std::size_t pick = j + rng() % (d - j);
      std::swap(features[j], features[pick]);
    }

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_score = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, int>> column(idx.size());
    for (std::size_t j = 0; j < subset; ++j) {
      const std::size_t f = features[j];
      for (std::size_t i = 0; i < idx.size(); ++i) {
        column[i] = {data.samples[idx[i]][f], data.labels[idx[i]]};
      }
      std::sort(column.begin(), column.end());
      std::vector<int> left(classes_, 0), right(classes_, 0);
      for (const auto& [v, label] : column) ++right[label];
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        ++left[column[i].second];
        --right[column[i].second];
        if (column[i].first == column[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1);
        const double nr = static_cast<double>(column.size() - i - 1);
        const double score =
            (nl * gini(left, nl) + nr * gini(right, nr)) / (nl + nr);
        if (score < best_score) {
          best_score = score;
          best_feature = static_cast<int>(f);
          best_threshold = (column[i].first + column[i + 1].first) / 2.0;
        }
      }
    }
    if (best_feature < 0) return make_leaf(leaf_label);

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : idx) {
      (data.samples[i][best_feature] <= best_threshold ? left_idx : right_idx)
          .push_back(i);
    }
    if (left_idx.empty() || right_idx.empty()) return make_leaf(leaf_label);

    const int node = static_cast<int>(nodes_.size());
    nodes_.push_back(TreeNode{best_feature, best_threshold, -1, -1, 0});
    const int next_depth = depth > 0 ? depth - 1 : depth;
    const int l = build(data, left_idx, next_depth, rng);
    const int r = build(data, right_idx, next_depth, rng);
    nodes_[node].left = l;
    nodes_[node].right = r;
    return node;
  }

  int make_leaf(int label) {
    nodes_.push_back(TreeNode{-1, 0.0, -1, -1, label});
    return static_cast<int>(nodes_.size() - 1);
  }

  std::vector<TreeNode> nodes_;
  int root_ = 0;
  int classes_ = 0;
};

class ForestModel final : public Model {
 public:
  ForestModel(const Dataset& data, const Hyperparams& hp) {
    width_ = data.width();
    classes_ = static_cast<int>(data.class_names.size());
    const std::size_t n = data.size();
    std::uint64_t state = hp.seed ^ 0x9e3779b97f4a7c15ULL;
    trees_.resize(std::max(1, hp.rf_trees));
    for (auto& tree : trees_) {
      std::mt19937_64 rng(splitmix64(state));
      std::vector<std::size_t> bootstrap(n);
      for (auto& v : bootstrap) v = rng() % n;
      tree.fit(data, bootstrap, classes_, hp.rf_max_depth, rng);
    }
  }

  int predict(std::span<const double> sample) const override {
    check_width(sample);
    std::vector<int> votes(classes_, 0);
    for (const auto& tree : trees_) ++votes[tree.predict(sample)];
    int best = 0;
    for (int c = 1; c < classes_; ++c) {
      if (votes[c] > votes[best]) best = c;
    }
    return best;
  }

  std::string name() const override { return "rf"; }

 private:
  std::vector<DecisionTree> trees_;
  int classes_ = 0;
};

}  // namespace

void Model::check_width(std::span<const double> sample) const {
  if (sample.size() != width_) {
    throw std::invalid_argument("predict: feature width mismatch");
  }
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::LogisticRegression: return "lr";
    case ModelKind::LinearDiscriminant: return "lda";
    case ModelKind::KNearest: return "knn";
    case ModelKind::SupportVector: return "svm";
    case ModelKind::RandomForest: return "rf";
  }
  return "?";
}

std::optional<ModelKind> parse_model_name(std::string_view name) {
  if (name == "lr") return ModelKind::LogisticRegression;
  if (name == "lda") return ModelKind::LinearDiscriminant;
  if (name == "knn") return ModelKind::KNearest;
  if (name == "svm") return ModelKind::SupportVector;
  if (name == "rf") return ModelKind::RandomForest;
  return std::nullopt;
}

std::unique_ptr<Model> train(ModelKind kind, const Dataset& data,
                             const Hyperparams& params) {
  data.validate();
  switch (kind) {
    case ModelKind::LogisticRegression:
      return std::make_unique<LogisticModel>(data, params, nullptr);
    case ModelKind::LinearDiscriminant:
      return std::make_unique<LdaModel>(data, params);
    case ModelKind::KNearest:
      return std::make_unique<KnnModel>(data, params);
    case ModelKind::SupportVector:
      return std::make_unique<SvmModel>(data, params);
    case ModelKind::RandomForest:
      return std::make_unique<ForestModel>(data, params);
  }
  throw std::invalid_argument("train: unknown model kind");
}

std::unique_ptr<Model> train_logistic(const Dataset& data,
                                      const Hyperparams& params,
                                      std::vector<double>* loss_history) {
  data.validate();
  return std::make_unique<LogisticModel>(data, params, loss_history);
}

}  // namespace cjlab::classifier
