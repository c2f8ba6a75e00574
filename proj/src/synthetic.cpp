#include "thyme/synthetic.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace thyme {
namespace {

NodeSet random_set(std::size_t lo, std::size_t count, std::size_t size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(lo, lo + count - 1);
  NodeSet nodes;
  while (nodes.size() < size) {
    const auto v = static_cast<NodeId>(pick(rng));
    if (std::find(nodes.begin(), nodes.end(), v) == nodes.end()) nodes.push_back(v);
  }
  normalize_node_set(nodes);
  return nodes;
}

// Compacts ids to 0..k-1 in first-appearance order.
TemporalHypergraph compact(std::vector<TemporalHyperedge> edges) {
  NodeId next = 0;
  std::vector<NodeId> id_of;
  for (auto& e : edges) {
    for (NodeId& v : e.nodes) {
      if (v >= id_of.size()) id_of.resize(v + 1, ~NodeId{0});
      if (id_of[v] == ~NodeId{0}) id_of[v] = next++;
      v = id_of[v];
    }
    normalize_node_set(e.nodes);
  }
  return TemporalHypergraph(next, std::move(edges));
}

}  // namespace

TemporalHypergraph uniform_temporal_hypergraph(const UniformHypergraphConfig& config,
                                               RandomSeed seed) {
  if (config.min_size == 0 || config.min_size > config.max_size ||
      config.max_size > config.node_count || config.max_gap < 1) {
    throw std::invalid_argument("uniform_temporal_hypergraph: bad configuration");
  }
  Rng rng(seed.value);
  std::uniform_int_distribution<std::size_t> size(config.min_size, config.max_size);
  std::uniform_int_distribution<Timestamp> gap(1, config.max_gap);
  std::vector<TemporalHyperedge> edges;
  edges.reserve(config.edge_count);
  Timestamp t = 0;
  for (std::size_t i = 0; i < config.edge_count; ++i) {
    t += gap(rng);
    edges.push_back({random_set(0, config.node_count, size(rng), rng), t});
  }
  return compact(std::move(edges));
}

TemporalHypergraph local_repetition_hypergraph(const LocalRepetitionConfig& config, RandomSeed seed) {
  if (config.min_size == 0 || config.min_size > config.max_size ||
      config.max_size > config.community_size || config.community_size > config.node_count ||
      config.active_sets == 0 || config.active_sets > config.distinct_sets) {
    throw std::invalid_argument("local_repetition_hypergraph: bad configuration");
  }
  Rng rng(seed.value);
  std::uniform_int_distribution<std::size_t> size(config.min_size, config.max_size);
  const std::size_t communities = std::max<std::size_t>(1, config.node_count / config.community_size);
  std::uniform_int_distribution<std::size_t> community(0, communities - 1);

  std::set<NodeSet> seen;
  std::vector<NodeSet> pool;
  std::size_t attempts = 0;
  while (pool.size() < config.distinct_sets) {
    if (++attempts > 100 * config.distinct_sets) {
      throw std::invalid_argument("local_repetition_hypergraph: cannot draw enough distinct sets");
    }
    const std::size_t c = community(rng);
    NodeSet s = random_set(c * config.community_size, config.community_size, size(rng), rng);
    if (seen.insert(s).second) pool.push_back(std::move(s));
  }

  // Active subset of the pool. Replacements cycle through the inactive rest
  // in a shuffled queue, so every pool set shows up once enough swaps occur.
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> active(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(config.active_sets));
  std::deque<std::size_t> inactive(order.begin() + static_cast<std::ptrdiff_t>(config.active_sets), order.end());

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_active(0, active.size() - 1);
  std::vector<TemporalHyperedge> edges;
  edges.reserve(config.edge_count);
  for (std::size_t i = 0; i < config.edge_count; ++i) {
    if (!inactive.empty() && coin(rng) < config.swap_probability) {
      std::size_t& slot = active[pick_active(rng)];
      inactive.push_back(slot);
      slot = inactive.front();
      inactive.pop_front();
    }
    edges.push_back({pool[active[pick_active(rng)]], static_cast<Timestamp>(i + 1)});
  }
  return compact(std::move(edges));
}

}  // namespace thyme
