#include "thyme/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "thyme/node_set_hash.hpp"

namespace thyme {

void normalize_node_set(NodeSet& nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

TemporalHypergraph::TemporalHypergraph(std::size_t node_count,
                                       std::vector<TemporalHyperedge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& nodes = edges_[i].nodes;
    if (nodes.empty()) {
      throw std::invalid_argument("hyperedge " + std::to_string(i) + " is empty");
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k] >= node_count_) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) + " references node " +
                                    std::to_string(nodes[k]) + " outside the node universe");
      }
      if (k > 0 && nodes[k - 1] >= nodes[k]) {
        throw std::invalid_argument("hyperedge " + std::to_string(i) +
                                    " is not a sorted duplicate-free node set");
      }
    }
    if (i > 0 && edges_[i - 1].time >= edges_[i].time) {
      throw std::invalid_argument("timestamps must strictly increase (edge " +
                                  std::to_string(i) + ")");
    }
  }
}

std::size_t StaticHypergraph::overlap_pair_count() const {
  std::size_t twice = 0;
  for (const auto& adj : overlaps) twice += adj.size();
  return twice / 2;
}

std::vector<std::vector<EdgeId>> incidence_lists(std::span<const NodeSet> edges,
                                                 std::size_t node_count) {
  std::vector<std::vector<EdgeId>> incident(node_count);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    for (NodeId v : edges[e]) incident[v].push_back(e);
  }
  return incident;
}

StaticHypergraph induce_static(const TemporalHypergraph& graph) {
  StaticHypergraph result;
  result.node_count = graph.node_count();
  result.static_of.resize(graph.size());

  std::unordered_map<NodeSpan, EdgeId, NodeSpanHash, NodeSpanEqual> index;
  index.reserve(graph.size());
  for (EdgeId i = 0; i < graph.size(); ++i) {
    const NodeSet& nodes = graph[i].nodes;
    auto [it, inserted] = index.try_emplace(NodeSpan(nodes), static_cast<EdgeId>(result.edges.size()));
    if (inserted) {
      result.edges.push_back(nodes);
      result.occurrences.emplace_back();
    }
    result.static_of[i] = it->second;
    result.occurrences[it->second].push_back(i);
  }

  const auto incident = incidence_lists(result.edges, result.node_count);
  result.overlaps.resize(result.edges.size());
  std::vector<EdgeId> seen(result.edges.size(), ~EdgeId{0});
  for (EdgeId e = 0; e < result.edges.size(); ++e) {
    auto& adj = result.overlaps[e];
    for (NodeId v : result.edges[e]) {
      for (EdgeId f : incident[v]) {
        if (f != e && seen[f] != e) {
          seen[f] = e;
          adj.push_back(f);
        }
      }
    }
    std::sort(adj.begin(), adj.end());
  }
  return result;
}

}  // namespace thyme
