#pragma once

#include <cstddef>

#include "thyme/hypergraph.hpp"
#include "thyme/randomization.hpp"

namespace thyme {

// Uniform random node sets with strictly increasing timestamps.
struct UniformHypergraphConfig {
  std::size_t node_count = 40;
  std::size_t edge_count = 300;
  std::size_t min_size = 1;
  std::size_t max_size = 5;
  Timestamp max_gap = 3;  // gaps drawn from [1, max_gap]
};

TemporalHypergraph uniform_temporal_hypergraph(const UniformHypergraphConfig& config,
                                               RandomSeed seed);

/// Hyperedges drawn from a fixed pool of distinct node sets with temporally
/// local repetition: arrivals pick from a small active subset of the pool
/// that drifts slowly, so the same sets recur in bursts.
struct LocalRepetitionConfig {
  std::size_t node_count = 2000;
  std::size_t distinct_sets = 500;
  std::size_t edge_count = 50000;
  std::size_t min_size = 2;
  std::size_t max_size = 5;
  std::size_t community_size = 40;  // pool sets draw nodes from one community
  std::size_t active_sets = 40;
  double swap_probability = 0.02;  // per arrival, one active set is replaced
};

TemporalHypergraph local_repetition_hypergraph(const LocalRepetitionConfig& config, RandomSeed seed);

}  // namespace thyme
