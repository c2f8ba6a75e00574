#include <stdexcept>
#include <vector>

#include "thyme/counting.hpp"
#include "thyme/simd.hpp"

namespace thyme {

MotifCountVector count_brute_force(const TemporalHypergraph& graph, Timestamp delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  MotifCountVector counts;
  const MotifTable& table = motif_table();
  const std::size_t n = graph.size();
  std::vector<char> meets_i;  // meets_i[k - i]: e_i and e_k share a node
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t end = i + 1;
    while (end < n && !outside_window(graph.time(i), graph.time(end), delta)) ++end;
    meets_i.assign(end - i, 0);
    for (std::size_t k = i + 1; k < end; ++k) meets_i[k - i] = simd::intersects(graph.nodes(i), graph.nodes(k));

    for (std::size_t j = i + 1; j < end; ++j) {
      for (std::size_t k = j + 1; k < end; ++k) {
        // Skip triples whose overlap graph has fewer than two edges.
        const int links = meets_i[j - i] + meets_i[k - i];
        if (links == 0) continue;
        if (links == 1 && !simd::intersects(graph.nodes(j), graph.nodes(k))) continue;
        const RegionPattern p = region_pattern(graph.nodes(i), graph.nodes(j), graph.nodes(k));
        if (auto id = table.id_of(p)) counts.add(*id, 1);
      }
    }
  }
  return counts;
}

}  // namespace thyme
