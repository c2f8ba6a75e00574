#include <algorithm>
#include <stdexcept>
#include <vector>

#include "thyme/counting.hpp"

namespace thyme {
namespace {

struct Labelled {
  EdgeId edge;
  int label;
};

// Feeds the time-sorted union of the occurrence lists through a sliding
// window of width delta.
void run_sequence(const TemporalHypergraph& graph, std::span<const std::span<const EdgeId>> lists,
                  Timestamp delta, std::vector<Labelled>& merged, SequenceCounter& counter) {
  merged.clear();
  for (std::size_t label = 0; label < lists.size(); ++label) {
    for (EdgeId e : lists[label]) merged.push_back({e, static_cast<int>(label)});
  }
  // Temporal indices are in time order, so sort by index.
  std::sort(merged.begin(), merged.end(),
            [](const Labelled& a, const Labelled& b) { return a.edge < b.edge; });

  counter.reset();
  std::size_t window_start = 0;
  for (const Labelled& item : merged) {
    const Timestamp now = graph.time(item.edge);
    while (outside_window(graph.time(merged[window_start].edge), now, delta)) {
      counter.decrement(merged[window_start].label);
      ++window_start;
    }
    counter.increment(item.label);
  }
}

std::span<const EdgeId> prefix_below(const std::vector<EdgeId>& sorted, EdgeId bound) {
  const auto end = std::lower_bound(sorted.begin(), sorted.end(), bound);
  return {sorted.data(), static_cast<std::size_t>(end - sorted.begin())};
}

}  // namespace

void for_each_static_triple(const StaticHypergraph& statics,
                            const std::function<void(EdgeId, EdgeId, EdgeId)>& visit) {
  TripleScratch scratch(statics.size());
  for (EdgeId x = 0; x < statics.size(); ++x) {
    // Restrict to ids below x so that x is the newest member of every triple.
    auto neighbors = [&](EdgeId v) { return prefix_below(statics.overlaps[v], x); };
    enumerate_triples_containing(x, neighbors, scratch, [&](EdgeId u, EdgeId v) {
      visit(std::min(u, v), std::max(u, v), x);
    });
  }
}

std::array<std::uint64_t, 6> triple_sequence_counts(const TemporalHypergraph& graph,
                                                    const StaticHypergraph& statics,
                                                    const std::array<EdgeId, 3>& triple,
                                                    Timestamp delta) {
  std::vector<Labelled> merged;
  SequenceCounter counter;
  const std::span<const EdgeId> lists[3] = {statics.occurrences[triple[0]],
                                            statics.occurrences[triple[1]],
                                            statics.occurrences[triple[2]]};
  run_sequence(graph, lists, delta, merged, counter);
  std::array<std::uint64_t, 6> out{};
  for (std::size_t p = 0; p < kTripleOrders.size(); ++p) {
    const auto& o = kTripleOrders[p];
    out[p] = counter.count(o[0], o[1], o[2]);
  }
  return out;
}

MotifCountVector count_dp(const TemporalHypergraph& graph, Timestamp delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const StaticHypergraph statics = induce_static(graph);
  const MotifTable& table = motif_table();
  MotifCountVector counts;
  std::vector<Labelled> merged;
  SequenceCounter counter;

  auto credit = [&](RegionPattern p, std::uint64_t n) {
    if (n == 0) return;
    const auto id = table.id_of(p);
    if (!id) throw std::logic_error("count_dp: credited a disconnected pattern");
    counts.add(*id, n);
  };

  // Triples of distinct static edges: only the six all-distinct orders.
  for_each_static_triple(statics, [&](EdgeId a, EdgeId b, EdgeId c) {
    const std::span<const EdgeId> lists[3] = {statics.occurrences[a], statics.occurrences[b],
                                              statics.occurrences[c]};
    run_sequence(graph, lists, delta, merged, counter);
    const RegionPattern base =
        region_pattern(statics.edges[a], statics.edges[b], statics.edges[c]);
    for (const auto& o : kTripleOrders) {
      credit(permute_pattern(base, o), counter.count(o[0], o[1], o[2]));
    }
  });

  // Overlapping pairs: the six orders that use both labels.
  constexpr int kPairOrders[6][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0},
                                     {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  for (EdgeId b = 0; b < statics.size(); ++b) {
    for (EdgeId a : prefix_below(statics.overlaps[b], b)) {
      const std::span<const EdgeId> lists[2] = {statics.occurrences[a], statics.occurrences[b]};
      run_sequence(graph, lists, delta, merged, counter);
      const NodeSpan sets[2] = {statics.edges[a], statics.edges[b]};
      for (const auto& o : kPairOrders) {
        const std::uint64_t n = counter.count(o[0], o[1], o[2]);
        if (n > 0) credit(region_pattern(sets[o[0]], sets[o[1]], sets[o[2]]), n);
      }
    }
  }

  // Single static edges: three occurrences of the same set.
  for (EdgeId a = 0; a < statics.size(); ++a) {
    if (statics.occurrences[a].size() < 3) continue;
    const std::span<const EdgeId> lists[1] = {statics.occurrences[a]};
    run_sequence(graph, lists, delta, merged, counter);
    const NodeSpan set = statics.edges[a];
    credit(region_pattern(set, set, set), counter.count(0, 0, 0));
  }
  return counts;
}

}  // namespace thyme
