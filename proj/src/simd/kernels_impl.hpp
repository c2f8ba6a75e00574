#pragma once

#include "thyme/simd.hpp"

namespace thyme::simd::scalar {

std::size_t intersection_size(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb);
bool intersects(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb);
OrderedPairCount count_less_pairs(const Timestamp* a, std::size_t na, const Timestamp* b,
                                  std::size_t nb);
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);

}  // namespace thyme::simd::scalar

#if defined(THYME_HAS_AVX2)
namespace thyme::simd::avx2 {

std::size_t intersection_size(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb);
bool intersects(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb);
OrderedPairCount count_less_pairs(const Timestamp* a, std::size_t na, const Timestamp* b,
                                  std::size_t nb);
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);

}  // namespace thyme::simd::avx2
#endif
