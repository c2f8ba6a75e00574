#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "thyme/counting.hpp"
#include "thyme/simd.hpp"

namespace thyme {
namespace {

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

MotifCountVector count_thyme_plus(const TemporalHypergraph& graph, Timestamp delta,
                                  WindowStats* stats, const QObserver& observer) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const StaticHypergraph statics = induce_static(graph);
  const MotifTable& table = motif_table();
  const simd::KernelTable& k = simd::kernels();
  ProjectedGraphQ window(statics);
  TripleScratch scratch(statics.size());
  MotifCountVector counts;
  auto neighbors = [&](EdgeId s) { return window.neighbors(s); };

  auto credit = [&](RegionPattern p, std::uint64_t n) {
    if (n == 0) return;
    const auto id = table.id_of(p);
    assert(id);
    counts.add(*id, n);
  };

  EdgeId oldest = 0;
  for (EdgeId i = 0; i < graph.size(); ++i) {
    const EdgeId s = statics.static_of[i];
    window.insert(s, graph.time(i));
    while (outside_window(graph.time(oldest), graph.time(i), delta)) {
      window.remove_oldest(statics.static_of[oldest]);
      ++oldest;
    }
    if (stats) {
      stats->peak_nodes = std::max(stats->peak_nodes, window.node_count());
      stats->peak_edges = std::max(stats->peak_edges, window.edge_count());
    }
    if (observer) observer(i, window);

    const NodeSpan own = statics.edges[s];

    // comb3: three distinct sets, e_i last; the other two in either order.
    enumerate_triples_containing(s, neighbors, scratch, [&](EdgeId a, EdgeId b) {
      const auto ta = window.times(a);
      const auto tb = window.times(b);
      const simd::OrderedPairCount pairs = k.count_less_pairs(ta.data(), ta.size(), tb.data(), tb.size());
      assert(pairs.disjoint);
      const std::uint64_t before = pairs.less;  // a earlier than b
      const std::uint64_t after = static_cast<std::uint64_t>(ta.size()) * tb.size() - before;
      const RegionPattern p = region_pattern(statics.edges[a], statics.edges[b], own);
      credit(p, before);
      if (after > 0) credit(permute_pattern(p, {1, 0, 2}), after);
    });

    // comb2: e_i's set appears twice, a neighbor once or twice.
    const auto own_times = window.times(s);
    const auto earlier_own = own_times.first(own_times.size() - 1);
    for (EdgeId j : window.neighbors(s)) {
      const auto tj = window.times(j);
      const NodeSpan other = statics.edges[j];
      const std::size_t shared = k.intersection_size(own.data(), own.size(), other.data(), other.size());
      const simd::OrderedPairCount pairs =
          k.count_less_pairs(earlier_own.data(), earlier_own.size(), tj.data(), tj.size());
      const std::uint64_t own_first = pairs.less;
      const std::uint64_t other_first =
          static_cast<std::uint64_t>(earlier_own.size()) * tj.size() - own_first;
      // <own, other, own>, <other, own, own>, <other, other, own>
      credit(pattern_from_cardinalities(own.size(), other.size(), own.size(), shared, shared,
                                        own.size(), shared),
             own_first);
      credit(pattern_from_cardinalities(other.size(), own.size(), own.size(), shared, own.size(),
                                        shared, shared),
             other_first);
      credit(pattern_from_cardinalities(other.size(), other.size(), own.size(), other.size(),
                                        shared, shared, shared),
             choose2(tj.size()));
    }

    // comb1: two earlier copies of e_i's set.
    credit(RegionPattern(1u << 6), choose2(earlier_own.size()));
  }
  return counts;
}

}  // namespace thyme
