#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "thyme/hypergraph.hpp"

namespace thyme {

// FNV-1a over the node ids; node sets are already canonical (sorted).
struct NodeSpanHash {
  std::size_t operator()(NodeSpan nodes) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (NodeId v : nodes) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct NodeSpanEqual {
  bool operator()(NodeSpan a, NodeSpan b) const noexcept {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
};

}  // namespace thyme
