#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace thyme::simd {
namespace {

constexpr KernelTable kScalarTable{
    Isa::scalar,         scalar::intersection_size, scalar::intersects,
    scalar::count_less_pairs, scalar::dot,          scalar::axpy,
};

#if defined(THYME_HAS_AVX2)
constexpr KernelTable kAvx2Table{
    Isa::avx2,         avx2::intersection_size, avx2::intersects,
    avx2::count_less_pairs, avx2::dot,          avx2::axpy,
};
#endif

const KernelTable& select_table() {
  if (const char* forced = std::getenv("THYME_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return kScalarTable;
    if (name == "avx2") return kernels_for(Isa::avx2);
    throw std::runtime_error("THYME_ISA must be 'scalar' or 'avx2', got '" + name + "'");
  }
  if (isa_supported(Isa::avx2)) return kernels_for(Isa::avx2);
  return kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(THYME_HAS_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("instruction set '" + std::string(isa_name(isa)) +
                             "' is not available");
  }
#if defined(THYME_HAS_AVX2)
  if (isa == Isa::avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& kernels() {
  static const KernelTable& table = select_table();
  return table;
}

}  // namespace thyme::simd
