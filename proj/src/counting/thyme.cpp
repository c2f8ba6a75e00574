#include <algorithm>
#include <stdexcept>

#include "thyme/counting.hpp"

namespace thyme {
namespace {

template <class Visit>
void enumerate_window_instances(const TemporalHypergraph& graph, Timestamp delta,
                                WindowStats* stats, const PObserver& observer, Visit&& visit) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const MotifTable& table = motif_table();
  ProjectedGraphP window(graph);
  TripleScratch scratch(graph.size());
  auto neighbors = [&](EdgeId v) { return window.neighbors(v); };

  EdgeId oldest = 0;
  for (EdgeId i = 0; i < graph.size(); ++i) {
    window.insert(i);
    while (outside_window(graph.time(oldest), graph.time(i), delta)) {
      window.remove_oldest();
      ++oldest;
    }
    if (stats) {
      stats->peak_nodes = std::max(stats->peak_nodes, window.node_count());
      stats->peak_edges = std::max(stats->peak_edges, window.edge_count());
    }
    if (observer) observer(i, window);

    // Every other member is older than e_i, so e_i is the last of the triple.
    enumerate_triples_containing(i, neighbors, scratch, [&](EdgeId u, EdgeId v) {
      const EdgeId first = std::min(u, v);
      const EdgeId second = std::max(u, v);
      const auto id =
          table.id_of(region_pattern(graph.nodes(first), graph.nodes(second), graph.nodes(i)));
      if (!id) throw std::logic_error("count_thyme: connected triple classified as disconnected");
      visit(Instance{first, second, i, *id});
    });
  }
}

}  // namespace

MotifCountVector count_thyme(const TemporalHypergraph& graph, Timestamp delta,
                             WindowStats* stats, const PObserver& observer) {
  MotifCountVector counts;
  enumerate_window_instances(graph, delta, stats, observer,
                             [&](const Instance& inst) { counts.add(inst.motif, 1); });
  return counts;
}

void for_each_instance(const TemporalHypergraph& graph, Timestamp delta,
                       const std::function<void(const Instance&)>& visit) {
  enumerate_window_instances(graph, delta, nullptr, {}, visit);
}

}  // namespace thyme
