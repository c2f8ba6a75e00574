#include <stdexcept>
#include <string>

#include "thyme/counting.hpp"
#include "thyme/simd.hpp"

namespace thyme {

std::uint64_t MotifCountVector::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_) {
    if (__builtin_add_overflow(sum, c, &sum)) throw CountOverflow("motif count total overflow");
  }
  return sum;
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::brute_force:
      return "bruteforce";
    case Algorithm::dp:
      return "dp";
    case Algorithm::thyme:
      return "thyme";
    case Algorithm::thyme_plus:
      return "thyme-plus";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "bruteforce" || name == "brute-force") return Algorithm::brute_force;
  if (name == "dp") return Algorithm::dp;
  if (name == "thyme") return Algorithm::thyme;
  if (name == "thyme-plus" || name == "thyme+") return Algorithm::thyme_plus;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

CountResult count_motifs(Algorithm algorithm, const TemporalHypergraph& graph, Timestamp delta) {
  CountResult result;
  switch (algorithm) {
    case Algorithm::brute_force:
      result.counts = count_brute_force(graph, delta);
      break;
    case Algorithm::dp:
      result.counts = count_dp(graph, delta);
      break;
    case Algorithm::thyme:
      result.counts = count_thyme(graph, delta, &result.window);
      break;
    case Algorithm::thyme_plus:
      result.counts = count_thyme_plus(graph, delta, &result.window);
      break;
  }
  return result;
}

OrderedPairs count_ordered_timestamp_pairs(std::span<const Timestamp> a,
                                           std::span<const Timestamp> b) {
  const simd::OrderedPairCount raw = simd::count_less_pairs(a, b);
  if (!raw.disjoint) {
    throw std::invalid_argument("count_ordered_timestamp_pairs: timestamp sets overlap");
  }
  const std::uint64_t all = static_cast<std::uint64_t>(a.size()) * b.size();
  return OrderedPairs{raw.less, all - raw.less};
}

}  // namespace thyme
