// Compiled with -mavx2 -mfma; only reached when the CPU reports AVX2.

#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace thyme::simd::avx2 {
namespace {

// Lane mask of `va` elements equal to any element of `vb` (8 x 8 all-pairs).
inline __m256i match_any(__m256i va, __m256i vb) {
  const __m256i r1 = _mm256_shuffle_epi32(vb, _MM_SHUFFLE(0, 3, 2, 1));
  const __m256i r2 = _mm256_shuffle_epi32(vb, _MM_SHUFFLE(1, 0, 3, 2));
  const __m256i r3 = _mm256_shuffle_epi32(vb, _MM_SHUFFLE(2, 1, 0, 3));
  const __m256i s0 = _mm256_permute2x128_si256(vb, vb, 0x01);
  const __m256i s1 = _mm256_permute2x128_si256(r1, r1, 0x01);
  const __m256i s2 = _mm256_permute2x128_si256(r2, r2, 0x01);
  const __m256i s3 = _mm256_permute2x128_si256(r3, r3, 0x01);

  __m256i m = _mm256_cmpeq_epi32(va, vb);
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, r1));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, r2));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, r3));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, s0));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, s1));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, s2));
  m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, s3));
  return m;
}

inline __m256i load8(const NodeId* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

std::size_t intersection_size(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb) {
  std::size_t i = 0, j = 0, count = 0;
  while (i + 8 <= na && j + 8 <= nb) {
    const __m256i m = match_any(load8(a + i), load8(b + j));
    count += static_cast<std::size_t>(std::popcount(
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(m)))));
    const NodeId amax = a[i + 7];
    const NodeId bmax = b[j + 7];
    if (amax <= bmax) i += 8;
    if (bmax <= amax) j += 8;
  }
  return count + scalar::intersection_size(a + i, na - i, b + j, nb - j);
}

bool intersects(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb) {
  std::size_t i = 0, j = 0;
  while (i + 8 <= na && j + 8 <= nb) {
    const __m256i m = match_any(load8(a + i), load8(b + j));
    if (!_mm256_testz_si256(m, m)) return true;
    const NodeId amax = a[i + 7];
    const NodeId bmax = b[j + 7];
    if (amax <= bmax) i += 8;
    if (bmax <= amax) j += 8;
  }
  return scalar::intersects(a + i, na - i, b + j, nb - j);
}

OrderedPairCount count_less_pairs(const Timestamp* a, std::size_t na, const Timestamp* b,
                                  std::size_t nb) {
  OrderedPairCount out;
  std::size_t i = 0;
  for (std::size_t j = 0; j < nb; ++j) {
    const __m256i vb = _mm256_set1_epi64x(b[j]);
    // Advance over the prefix of a that is below b[j], four at a time.
    while (i + 4 <= na) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(vb, va)));
      const int below = std::popcount(static_cast<unsigned>(mask));
      i += static_cast<std::size_t>(below);
      if (below < 4) break;
    }
    while (i < na && a[i] < b[j]) ++i;
    if (i < na && a[i] == b[j]) out.disjoint = false;
    out.less += i;
  }
  return out;
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace thyme::simd::avx2
