#include "kernels_impl.hpp"

namespace thyme::simd::scalar {

std::size_t intersection_size(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb) {
  std::size_t i = 0, j = 0, count = 0;
  while (i < na && j < nb) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool intersects(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb) {
  std::size_t i = 0, j = 0;
  while (i < na && j < nb) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

OrderedPairCount count_less_pairs(const Timestamp* a, std::size_t na, const Timestamp* b,
                                  std::size_t nb) {
  OrderedPairCount out;
  std::size_t i = 0;
  for (std::size_t j = 0; j < nb; ++j) {
    while (i < na && a[i] < b[j]) ++i;
    if (i < na && a[i] == b[j]) out.disjoint = false;
    out.less += i;
  }
  return out;
}

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace thyme::simd::scalar
