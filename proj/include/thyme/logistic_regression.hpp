#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace thyme {

/// Dense row-major design matrix with binary labels.
struct LabelledSamples {
  std::size_t cols = 0;
  std::vector<double> features;  // rows * cols
  std::vector<int> labels;       // 0 or 1

  std::size_t rows() const noexcept { return labels.size(); }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(features).subspan(r * cols, cols);
  }
  void add(std::span<const double> x, int label);
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-column affine map to zero mean and unit variance. Constant columns are
// centred only.
class Standardizer {
 public:
  static Standardizer fit(const LabelledSamples& data);
  LabelledSamples transform(const LabelledSamples& data) const;

  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& scale() const noexcept { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;

  double probability(std::span<const double> x) const;
  int predict(std::span<const double> x) const { return probability(x) >= 0.5 ? 1 : 0; }
};

// Mean binary cross-entropy.
double logistic_loss(const LogisticModel& model, const LabelledSamples& data);

// Gradient of logistic_loss; the last entry is d/d(bias).
std::vector<double> logistic_gradient(const LogisticModel& model, const LabelledSamples& data);

struct TrainOptions {
  std::size_t epochs = 500;
  double learning_rate = 0.1;
};

// Full-batch gradient descent from zero. Throws TrainingError if the
// training labels contain a single class.
LogisticModel train_logistic_regression(const LabelledSamples& train, const TrainOptions& options);

double accuracy(const LogisticModel& model, const LabelledSamples& data);

// Standardizes with training statistics, trains, and returns test accuracy.
double train_eval_logreg(const LabelledSamples& train, const LabelledSamples& test,
                         std::size_t epochs, double learning_rate);

}  // namespace thyme
