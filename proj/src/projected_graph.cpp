#include "thyme/projected_graph.hpp"

#include <cassert>

namespace thyme {
namespace {

void erase_value(std::vector<EdgeId>& list, EdgeId value) {
  auto it = std::find(list.begin(), list.end(), value);
  assert(it != list.end());
  *it = list.back();
  list.pop_back();
}

}  // namespace

ProjectedGraphP::ProjectedGraphP(const TemporalHypergraph& graph)
    : graph_(&graph),
      adjacency_(graph.size()),
      incident_(graph.node_count()),
      seen_(graph.size(), ~EdgeId{0}) {}

void ProjectedGraphP::insert(EdgeId e) {
  assert(count_ == 0 || e == first_ + count_);
  if (count_ == 0) first_ = e;
  ++count_;

  // Collect the older overlapping members, ascending, so that every
  // adjacency list stays sorted by arrival.
  std::vector<EdgeId> older;
  for (NodeId v : graph_->nodes(e)) {
    for (EdgeId f : incident_[v].view()) {
      if (seen_[f] != e) {
        seen_[f] = e;
        older.push_back(f);
      }
    }
    incident_[v].push_back(e);
  }
  std::sort(older.begin(), older.end());
  auto& adj = adjacency_[e];
  for (EdgeId f : older) {
    adj.push_back(f);
    adjacency_[f].push_back(e);
  }
  edge_count_ += older.size();
}

void ProjectedGraphP::remove_oldest() {
  assert(count_ > 0);
  const EdgeId x = first_;
  auto& adj = adjacency_[x];
  for (EdgeId y : adj.view()) {
    assert(adjacency_[y].front() == x);
    adjacency_[y].pop_front();
  }
  edge_count_ -= adj.size();
  adj.clear();
  for (NodeId v : graph_->nodes(x)) {
    assert(incident_[v].front() == x);
    incident_[v].pop_front();
  }
  ++first_;
  --count_;
}

ProjectedGraphQ::ProjectedGraphQ(const StaticHypergraph& statics)
    : statics_(&statics),
      times_(statics.size()),
      adjacency_(statics.size()),
      incident_(statics.node_count),
      seen_(statics.size(), 0) {}

void ProjectedGraphQ::insert(EdgeId s, Timestamp t) {
  auto& times = times_[s];
  assert(times.empty() || times.back() < t);
  const bool fresh = times.empty();
  times.push_back(t);
  ++occurrences_;
  if (!fresh) return;

  ++node_count_;
  ++epoch_;
  auto& adj = adjacency_[s];
  for (NodeId v : statics_->edges[s]) {
    for (EdgeId f : incident_[v]) {
      if (seen_[f] != epoch_) {
        seen_[f] = epoch_;
        adj.push_back(f);
        adjacency_[f].push_back(s);
      }
    }
    incident_[v].push_back(s);
  }
  edge_count_ += adj.size();
}

void ProjectedGraphQ::remove_oldest(EdgeId s) {
  auto& times = times_[s];
  assert(!times.empty());
  times.pop_front();
  --occurrences_;
  if (!times.empty()) return;

  --node_count_;
  auto& adj = adjacency_[s];
  for (EdgeId f : adj) erase_value(adjacency_[f], s);
  edge_count_ -= adj.size();
  adj.clear();
  for (NodeId v : statics_->edges[s]) erase_value(incident_[v], s);
}

}  // namespace thyme
