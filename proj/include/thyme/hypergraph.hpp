#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thyme {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::int64_t;

// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;
using NodeSpan = std::span<const NodeId>;

// Sorts and deduplicates in place.
void normalize_node_set(NodeSet& nodes);

struct TemporalHyperedge {
  NodeSet nodes;
  Timestamp time = 0;

  friend bool operator==(const TemporalHyperedge&, const TemporalHyperedge&) = default;
};

/// Time-ordered sequence of temporal hyperedges over nodes 0..node_count-1.
///
/// Construction validates the invariants: every node set is non-empty,
/// sorted and duplicate-free, every id is below node_count, and
/// timestamps strictly increase. Violations throw std::invalid_argument.
class TemporalHypergraph {
 public:
  TemporalHypergraph() = default;
  TemporalHypergraph(std::size_t node_count, std::vector<TemporalHyperedge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const TemporalHyperedge& operator[](std::size_t i) const { return edges_[i]; }
  const std::vector<TemporalHyperedge>& edges() const noexcept { return edges_; }

  NodeSpan nodes(std::size_t i) const { return edges_[i].nodes; }
  Timestamp time(std::size_t i) const { return edges_[i].time; }

  friend bool operator==(const TemporalHypergraph&, const TemporalHypergraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<TemporalHyperedge> edges_;
};

/// Timestamp-free hypergraph induced by a temporal one.
///
/// Static edges are numbered in order of first appearance. For each static
/// edge we keep the temporal edges inducing it (I(e), ascending), and the
/// overlap graph between distinct static edges as sorted adjacency lists.
struct StaticHypergraph {
  std::size_t node_count = 0;
  std::vector<NodeSet> edges;
  std::vector<std::vector<EdgeId>> occurrences;
  std::vector<EdgeId> static_of;  // temporal edge -> static edge
  std::vector<std::vector<EdgeId>> overlaps;

  std::size_t size() const noexcept { return edges.size(); }
  std::size_t multiplicity(EdgeId e) const { return occurrences[e].size(); }
  std::size_t overlap_pair_count() const;
};

StaticHypergraph induce_static(const TemporalHypergraph& graph);

// Node -> list of edges containing it, for a collection of node sets.
std::vector<std::vector<EdgeId>> incidence_lists(std::span<const NodeSet> edges,
                                                 std::size_t node_count);

}  // namespace thyme
