#include "thyme/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace thyme {
namespace {

// Weighted sampling without replacement (exponential-key method).
void sample_without_replacement(std::span<const std::uint64_t> degrees, std::size_t count,
                                Rng& rng, NodeSet& out) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, NodeId>> keys;
  for (NodeId v = 0; v < degrees.size(); ++v) {
    if (degrees[v] == 0) continue;
    double u = unit(rng);
    while (u <= 0.0) u = unit(rng);
    keys.emplace_back(-std::log(u) / static_cast<double>(degrees[v]), v);
  }
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(count), keys.end());
  for (std::size_t i = 0; i < count; ++i) out.push_back(keys[i].second);
}

}  // namespace

RandomSeed seed_from_env(RandomSeed fallback) {
  if (const char* env = std::getenv("THYME_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return RandomSeed{v};
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("THYME_SEED must be an unsigned integer");
  }
  return fallback;
}

RandomSeed derive_seed(RandomSeed base, std::uint64_t stream) noexcept {
  // splitmix64 finalizer over (base, stream)
  std::uint64_t z = base.value + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return RandomSeed{z ^ (z >> 31)};
}

std::vector<NodeSet> hypercl(std::span<const std::uint64_t> degrees,
                             std::span<const std::size_t> sizes, RandomSeed seed) {
  const std::uint64_t degree_sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  const std::uint64_t size_sum = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
  if (degree_sum != size_sum) {
    throw std::invalid_argument("hypercl: degree sum " + std::to_string(degree_sum) +
                                " differs from size sum " + std::to_string(size_sum));
  }
  const std::size_t support = static_cast<std::size_t>(
      std::count_if(degrees.begin(), degrees.end(), [](std::uint64_t d) { return d > 0; }));
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("hypercl: hyperedge sizes must be positive");
    if (s > support) {
      throw GenerationError("hypercl: size " + std::to_string(s) + " exceeds the " +
                            std::to_string(support) + " nodes with positive degree");
    }
  }

  std::vector<NodeSet> out;
  out.reserve(sizes.size());
  if (sizes.empty()) return out;

  Rng rng(seed.value);
  std::discrete_distribution<std::size_t> pick(degrees.begin(), degrees.end());
  std::vector<std::uint32_t> taken(degrees.size(), 0);
  std::uint32_t round = 0;
  for (std::size_t s : sizes) {
    NodeSet nodes;
    nodes.reserve(s);
    ++round;
    bool filled = false;
    if (2 * s <= support) {
      // Rejection of repeats; bail out to exact sampling if the weights are
      // too concentrated for it to finish quickly.
      std::size_t attempts = 0;
      const std::size_t budget = 64 * s + 64;
      while (nodes.size() < s && attempts < budget) {
        ++attempts;
        const auto v = static_cast<NodeId>(pick(rng));
        if (taken[v] == round) continue;
        taken[v] = round;
        nodes.push_back(v);
      }
      filled = nodes.size() == s;
    }
    if (!filled) {
      nodes.clear();
      sample_without_replacement(degrees, s, rng, nodes);
    }
    normalize_node_set(nodes);
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<std::uint64_t> temporal_degrees(const TemporalHypergraph& graph) {
  std::vector<std::uint64_t> degrees(graph.node_count(), 0);
  for (const auto& e : graph.edges()) {
    for (NodeId v : e.nodes) ++degrees[v];
  }
  return degrees;
}

std::vector<std::size_t> hyperedge_sizes(const TemporalHypergraph& graph) {
  std::vector<std::size_t> sizes;
  sizes.reserve(graph.size());
  for (const auto& e : graph.edges()) sizes.push_back(e.nodes.size());
  return sizes;
}

namespace {

TemporalHypergraph assign_times(std::size_t node_count, std::vector<NodeSet> sets,
                                std::vector<Timestamp> times) {
  std::vector<TemporalHyperedge> edges;
  edges.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) edges.push_back({std::move(sets[i]), times[i]});
  std::sort(edges.begin(), edges.end(),
            [](const TemporalHyperedge& a, const TemporalHyperedge& b) { return a.time < b.time; });
  return TemporalHypergraph(node_count, std::move(edges));
}

}  // namespace

TemporalHypergraph shuffle_timestamps(const TemporalHypergraph& graph, RandomSeed seed) {
  std::vector<NodeSet> sets;
  std::vector<Timestamp> times;
  sets.reserve(graph.size());
  times.reserve(graph.size());
  for (const auto& e : graph.edges()) {
    sets.push_back(e.nodes);
    times.push_back(e.time);
  }
  Rng rng(seed.value);
  std::shuffle(times.begin(), times.end(), rng);
  return assign_times(graph.node_count(), std::move(sets), std::move(times));
}

TemporalHypergraph randomize_temporal(const TemporalHypergraph& graph, RandomSeed seed) {
  const auto degrees = temporal_degrees(graph);
  const auto sizes = hyperedge_sizes(graph);
  std::vector<NodeSet> sets = hypercl(degrees, sizes, derive_seed(seed, 0));
  std::vector<Timestamp> times;
  times.reserve(graph.size());
  for (const auto& e : graph.edges()) times.push_back(e.time);
  Rng rng(derive_seed(seed, 1).value);
  std::shuffle(times.begin(), times.end(), rng);
  return assign_times(graph.node_count(), std::move(sets), std::move(times));
}

}  // namespace thyme
