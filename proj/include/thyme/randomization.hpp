#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "thyme/hypergraph.hpp"

namespace thyme {

struct RandomSeed {
  std::uint64_t value = 0;
  friend bool operator==(RandomSeed, RandomSeed) = default;
};

// Seed from THYME_SEED if set, otherwise `fallback`.
RandomSeed seed_from_env(RandomSeed fallback = RandomSeed{1});

// The generator used by every randomized routine in the library.
using Rng = std::mt19937_64;

// Derives an independent stream for sub-task `stream` of a seeded job.
RandomSeed derive_seed(RandomSeed base, std::uint64_t stream) noexcept;

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chung-Lu style hypergraph sampling: each requested hyperedge of size s
/// draws s distinct nodes with probability proportional to degree.
///
/// Requires sum(degrees) == sum(sizes) (std::invalid_argument otherwise).
/// Throws GenerationError when a size exceeds the number of nodes with
/// positive degree. Output sizes match `sizes` element-wise.
std::vector<NodeSet> hypercl(std::span<const std::uint64_t> degrees,
                             std::span<const std::size_t> sizes, RandomSeed seed);

// Same node sets, timestamps permuted among them, re-sorted by time.
TemporalHypergraph shuffle_timestamps(const TemporalHypergraph& graph, RandomSeed seed);

// HyperCL over the temporal degree/size multisets, then the original
// timestamps assigned in random order.
TemporalHypergraph randomize_temporal(const TemporalHypergraph& graph, RandomSeed seed);

// Degree of each node counted over temporal hyperedges.
std::vector<std::uint64_t> temporal_degrees(const TemporalHypergraph& graph);
std::vector<std::size_t> hyperedge_sizes(const TemporalHypergraph& graph);

}  // namespace thyme
