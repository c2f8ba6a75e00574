#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "thyme/fifo_buffer.hpp"
#include "thyme/hypergraph.hpp"

namespace thyme {

/// Reusable stamp marks for triple enumeration; sized to the id space.
class TripleScratch {
 public:
  explicit TripleScratch(std::size_t id_space = 0) : stamp_(id_space, 0) {}

  void resize(std::size_t id_space) { stamp_.assign(id_space, 0); epoch_ = 0; }

  // Starts a new marking round and returns its tag.
  std::uint32_t next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    return epoch_;
  }
  void mark(std::uint32_t id) { stamp_[id] = epoch_; }
  bool marked(std::uint32_t id) const { return stamp_[id] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// Calls emit(u, v) once for every unordered connected triple {x, u, v}.
///
/// `neighbors(id)` returns a span of the ids adjacent to `id` (no repeats,
/// never `id` itself). Triples come in two shapes: both u and v adjacent to
/// x, or v reachable only through u. In the second shape u is the unique
/// member adjacent to both others, so each triple is produced exactly once.
template <class NeighborFn, class Emit>
void enumerate_triples_containing(std::uint32_t x, NeighborFn&& neighbors,
                                  TripleScratch& scratch, Emit&& emit) {
  const std::span<const std::uint32_t> nx = neighbors(x);
  scratch.next_epoch();
  scratch.mark(x);
  for (std::uint32_t u : nx) scratch.mark(u);

  for (std::size_t a = 0; a < nx.size(); ++a) {
    for (std::size_t b = a + 1; b < nx.size(); ++b) emit(nx[a], nx[b]);
  }
  for (std::uint32_t u : nx) {
    for (std::uint32_t v : neighbors(u)) {
      if (!scratch.marked(v)) emit(u, v);
    }
  }
}

/// Window graph over temporal hyperedges: members are the temporal edges
/// with index in [first, last], linked when their node sets intersect.
///
/// Members leave in arrival order, so every adjacency list and every
/// node-incidence list is a FIFO whose front is the oldest member.
class ProjectedGraphP {
 public:
  explicit ProjectedGraphP(const TemporalHypergraph& graph);

  void insert(EdgeId e);
  // Removes the oldest member.
  void remove_oldest();

  bool empty() const noexcept { return count_ == 0; }
  EdgeId first() const noexcept { return first_; }
  std::size_t node_count() const noexcept { return count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const EdgeId> neighbors(EdgeId e) const { return adjacency_[e].view(); }
  bool contains(EdgeId e) const noexcept { return count_ > 0 && e >= first_ && e < first_ + count_; }

 private:
  const TemporalHypergraph* graph_;
  std::vector<FifoBuffer<EdgeId>> adjacency_;
  std::vector<FifoBuffer<EdgeId>> incident_;  // node -> window members
  std::vector<EdgeId> seen_;
  EdgeId first_ = 0;
  std::size_t count_ = 0;
  std::size_t edge_count_ = 0;
};

/// Window graph over distinct node sets (static edge ids). Each present
/// static edge carries the ascending timestamps of its window occurrences.
class ProjectedGraphQ {
 public:
  explicit ProjectedGraphQ(const StaticHypergraph& statics);

  // Adds an occurrence at time t; creates the node if absent.
  void insert(EdgeId s, Timestamp t);
  // Drops the oldest occurrence of s; deletes the node once none remain.
  void remove_oldest(EdgeId s);

  bool contains(EdgeId s) const { return !times_[s].empty(); }
  std::span<const Timestamp> times(EdgeId s) const { return times_[s].view(); }
  std::span<const EdgeId> neighbors(EdgeId s) const { return adjacency_[s]; }

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t occurrence_count() const noexcept { return occurrences_; }

 private:
  const StaticHypergraph* statics_;
  std::vector<FifoBuffer<Timestamp>> times_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;  // node -> present static edges
  std::vector<std::uint64_t> seen_;
  std::uint64_t epoch_ = 0;
  std::size_t node_count_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t occurrences_ = 0;
};

}  // namespace thyme
