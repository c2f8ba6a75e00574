#include "thyme/logistic_regression.hpp"

#include <cmath>

#include "thyme/simd.hpp"

namespace thyme {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

void require_non_empty(const LabelledSamples& data, const char* what) {
  if (data.rows() == 0) throw TrainingError(std::string(what) + " set is empty");
}

}  // namespace

void LabelledSamples::add(std::span<const double> x, int label) {
  if (x.size() != cols) throw std::invalid_argument("LabelledSamples: row width mismatch");
  features.insert(features.end(), x.begin(), x.end());
  labels.push_back(label);
}

Standardizer Standardizer::fit(const LabelledSamples& data) {
  Standardizer s;
  s.mean_.assign(data.cols, 0.0);
  s.scale_.assign(data.cols, 1.0);
  if (data.rows() == 0) return s;
  const double n = static_cast<double>(data.rows());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto x = data.row(r);
    for (std::size_t c = 0; c < data.cols; ++c) s.mean_[c] += x[c];
  }
  for (double& m : s.mean_) m /= n;
  std::vector<double> var(data.cols, 0.0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto x = data.row(r);
    for (std::size_t c = 0; c < data.cols; ++c) {
      const double d = x[c] - s.mean_[c];
      var[c] += d * d;
    }
  }
  for (std::size_t c = 0; c < data.cols; ++c) {
    const double sd = std::sqrt(var[c] / n);
    s.scale_[c] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

LabelledSamples Standardizer::transform(const LabelledSamples& data) const {
  LabelledSamples out;
  out.cols = data.cols;
  out.labels = data.labels;
  out.features.resize(data.features.size());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.cols; ++c) {
      const std::size_t i = r * data.cols + c;
      out.features[i] = (data.features[i] - mean_[c]) / scale_[c];
    }
  }
  return out;
}

double LogisticModel::probability(std::span<const double> x) const {
  return sigmoid(simd::dot(weights, x) + bias);
}

double logistic_loss(const LogisticModel& model, const LabelledSamples& data) {
  require_non_empty(data, "loss");
  double total = 0.0;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const double z = simd::dot(model.weights, data.row(r)) + model.bias;
    // -[y log s(z) + (1-y) log(1 - s(z))] = softplus(z) - y z
    total += softplus(z) - (data.labels[r] == 1 ? z : 0.0);
  }
  return total / static_cast<double>(data.rows());
}

std::vector<double> logistic_gradient(const LogisticModel& model, const LabelledSamples& data) {
  require_non_empty(data, "gradient");
  const simd::KernelTable& k = simd::kernels();
  std::vector<double> grad(data.cols + 1, 0.0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto x = data.row(r);
    const double residual = model.probability(x) - static_cast<double>(data.labels[r]);
    k.axpy(residual, x.data(), grad.data(), data.cols);
    grad[data.cols] += residual;
  }
  const double inv = 1.0 / static_cast<double>(data.rows());
  for (double& g : grad) g *= inv;
  return grad;
}

LogisticModel train_logistic_regression(const LabelledSamples& train, const TrainOptions& options) {
  require_non_empty(train, "training");
  bool has_zero = false, has_one = false;
  for (int y : train.labels) {
    if (y == 0) has_zero = true;
    else if (y == 1) has_one = true;
    else throw std::invalid_argument("labels must be 0 or 1");
  }
  if (!has_zero || !has_one) throw TrainingError("training set contains a single class");

  const simd::KernelTable& k = simd::kernels();
  LogisticModel model;
  model.weights.assign(train.cols, 0.0);
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    const std::vector<double> grad = logistic_gradient(model, train);
    k.axpy(-options.learning_rate, grad.data(), model.weights.data(), train.cols);
    model.bias -= options.learning_rate * grad[train.cols];
  }
  return model;
}

double accuracy(const LogisticModel& model, const LabelledSamples& data) {
  require_non_empty(data, "evaluation");
  std::size_t correct = 0;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    if (model.predict(data.row(r)) == data.labels[r]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.rows());
}

double train_eval_logreg(const LabelledSamples& train, const LabelledSamples& test,
                         std::size_t epochs, double learning_rate) {
  require_non_empty(test, "test");
  const Standardizer standardizer = Standardizer::fit(train);
  const LogisticModel model = train_logistic_regression(standardizer.transform(train),
                                                        TrainOptions{epochs, learning_rate});
  return accuracy(model, standardizer.transform(test));
}

}  // namespace thyme
