#pragma once

// Data-parallel inner loops used by the counting and learning code.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The active table is chosen once at first use from the CPU
// features; setting THYME_ISA=scalar in the environment forces the
// reference path. Both variants are required to return identical results
// (dot products agree up to floating-point reassociation).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "thyme/hypergraph.hpp"

namespace thyme::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct OrderedPairCount {
  std::uint64_t less = 0;  // pairs (a, b) with a < b
  bool disjoint = true;    // false if some a == b
};

struct KernelTable {
  Isa isa;
  // |a ∩ b| for sorted duplicate-free inputs.
  std::size_t (*intersection_size)(const NodeId* a, std::size_t na, const NodeId* b,
                                   std::size_t nb);
  // Early-exit variant of the above.
  bool (*intersects)(const NodeId* a, std::size_t na, const NodeId* b, std::size_t nb);
  // Counts a<b pairs over A x B by a single merge pass. Inputs ascending.
  OrderedPairCount (*count_less_pairs)(const Timestamp* a, std::size_t na, const Timestamp* b,
                                       std::size_t nb);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

bool isa_supported(Isa isa) noexcept;

// Throws std::runtime_error if the ISA is not available on this machine/build.
const KernelTable& kernels_for(Isa isa);

// The dispatched table.
const KernelTable& kernels();

// Convenience wrappers over the dispatched table.
inline std::size_t intersection_size(NodeSpan a, NodeSpan b) {
  return kernels().intersection_size(a.data(), a.size(), b.data(), b.size());
}
inline bool intersects(NodeSpan a, NodeSpan b) {
  return kernels().intersects(a.data(), a.size(), b.data(), b.size());
}
inline OrderedPairCount count_less_pairs(std::span<const Timestamp> a,
                                         std::span<const Timestamp> b) {
  return kernels().count_less_pairs(a.data(), a.size(), b.data(), b.size());
}
inline double dot(std::span<const double> x, std::span<const double> y) {
  return kernels().dot(x.data(), y.data(), x.size());
}

}  // namespace thyme::simd
