#pragma once
// Reference implementations for tests. Everything here works on
// materialized std::set values and plain loops so that it shares no code
// with the library's counting paths.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "thyme/counting.hpp"
#include "thyme/hypergraph.hpp"
#include "thyme/logistic_regression.hpp"
#include "thyme/motif.hpp"
#include "thyme/synthetic.hpp"

namespace oracle {

using thyme::NodeId;
using NodeBag = std::set<NodeId>;

inline NodeBag bag(thyme::NodeSpan s) { return NodeBag(s.begin(), s.end()); }

// Region r is non-empty iff some node has membership mask kRegionMask[r-1]
// (bit 0 = first set, bit 1 = second, bit 2 = third).
inline constexpr std::array<unsigned, 7> kRegionMask{0b001, 0b010, 0b100, 0b011,
                                                     0b110, 0b101, 0b111};

inline thyme::RegionPattern pattern(const NodeBag& a, const NodeBag& b, const NodeBag& c) {
  NodeBag all = a;
  all.insert(b.begin(), b.end());
  all.insert(c.begin(), c.end());
  unsigned bits = 0;
  for (NodeId v : all) {
    const unsigned m = unsigned{a.count(v) > 0} | (unsigned{b.count(v) > 0} << 1) |
                       (unsigned{c.count(v) > 0} << 2);
    for (int r = 0; r < 7; ++r) {
      if (kRegionMask[r] == m) bits |= 1u << r;
    }
  }
  return thyme::RegionPattern(bits);
}

inline bool meets(const NodeBag& a, const NodeBag& b) {
  for (NodeId v : a) {
    if (b.count(v)) return true;
  }
  return false;
}

inline bool connected(const NodeBag& a, const NodeBag& b, const NodeBag& c) {
  return int{meets(a, b)} + int{meets(b, c)} + int{meets(c, a)} >= 2;
}

// Concrete sets realising a region pattern: region r contributes node r-1 to
// every set in its membership mask.
inline std::array<thyme::NodeSet, 3> realise(thyme::RegionPattern p) {
  std::array<thyme::NodeSet, 3> sets;
  for (int r = 1; r <= 7; ++r) {
    if (!p.region(r)) continue;
    for (int s = 0; s < 3; ++s) {
      if (kRegionMask[r - 1] >> s & 1u) sets[s].push_back(static_cast<NodeId>(r - 1));
    }
  }
  return sets;
}

// All index triples i<j<k with t_k - t_i <= delta and a connected overlap
// graph, classified through the set-based pattern.
inline thyme::MotifCountVector count(const thyme::TemporalHypergraph& g, thyme::Timestamp delta) {
  thyme::MotifCountVector counts;
  const std::size_t n = g.size();
  std::vector<NodeBag> bags;
  for (std::size_t i = 0; i < n; ++i) bags.push_back(bag(g.nodes(i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (g.time(k) - g.time(i) > delta) continue;
        if (!connected(bags[i], bags[j], bags[k])) continue;
        const auto id = thyme::motif_table().id_of(pattern(bags[i], bags[j], bags[k]));
        counts.add(*id, 1);
      }
    }
  }
  return counts;
}

inline thyme::TemporalHypergraph make(std::size_t nodes,
                                      std::vector<std::pair<thyme::Timestamp, thyme::NodeSet>> list) {
  std::vector<thyme::TemporalHyperedge> edges;
  for (auto& [t, s] : list) edges.push_back({std::move(s), t});
  return thyme::TemporalHypergraph(nodes, std::move(edges));
}

// The five-edge worked example over nodes 1..4 (node 0 unused).
inline thyme::TemporalHypergraph worked_example() {
  return make(5, {{1, {1, 2}}, {2, {2, 3}}, {3, {1, 2}}, {4, {3, 4}}, {6, {1, 2, 3}}});
}
inline constexpr thyme::Timestamp kWorkedDelta = 3;

// Small random graph for cross-checks. Few nodes so that sets overlap and
// repeat often.
inline thyme::TemporalHypergraph random_graph(std::uint64_t seed, std::size_t edges = 40) {
  thyme::UniformHypergraphConfig cfg;
  cfg.node_count = 6 + seed % 7;
  cfg.edge_count = edges;
  cfg.min_size = 1;
  cfg.max_size = 4;
  cfg.max_gap = 1 + static_cast<thyme::Timestamp>(seed % 4);
  return thyme::uniform_temporal_hypergraph(cfg, thyme::RandomSeed{seed});
}

// Two Gaussian clouds with a margin along a random direction; labels are
// exactly linearly separable.
inline thyme::LabelledSamples separable_samples(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> w(cols);
  double wn = 0.0;
  for (auto& x : w) {
    x = g(rng);
    wn += x * x;
  }
  for (auto& x : w) x /= std::sqrt(wn);
  thyme::LabelledSamples data;
  data.cols = cols;
  std::vector<double> row(cols);
  while (data.rows() < rows) {
    double proj = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = g(rng);
      proj += row[c] * w[c];
    }
    if (std::abs(proj) < 0.5) continue;
    data.add(row, proj > 0 ? 1 : 0);
  }
  return data;
}

}  // namespace oracle
