#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thyme/hypergraph.hpp"
#include "thyme/motif.hpp"
#include "thyme/projected_graph.hpp"

namespace thyme {

class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Instance counts for the 96 temporal motifs.
class MotifCountVector {
 public:
  std::uint64_t operator[](MotifId id) const { return counts_[id.index()]; }

  // Checked accumulate; throws CountOverflow on wrap-around.
  void add(MotifId id, std::uint64_t n) {
    std::uint64_t& slot = counts_[id.index()];
    if (__builtin_add_overflow(slot, n, &slot)) {
      throw CountOverflow("motif count overflow at motif " + std::to_string(id.value));
    }
  }
  void add(const MotifCountVector& other) {
    for (int m = 1; m <= kNumMotifs; ++m) add(MotifId{m}, other[MotifId{m}]);
  }

  std::uint64_t total() const;
  const std::array<std::uint64_t, kNumMotifs>& values() const noexcept { return counts_; }

  friend bool operator==(const MotifCountVector&, const MotifCountVector&) = default;

 private:
  std::array<std::uint64_t, kNumMotifs> counts_{};
};

enum class Algorithm { brute_force, dp, thyme, thyme_plus };

std::string_view to_string(Algorithm a) noexcept;
// Accepts bruteforce | dp | thyme | thyme-plus; throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);

// Largest projected graph seen during a windowed run.
struct WindowStats {
  std::size_t peak_nodes = 0;
  std::size_t peak_edges = 0;
};

struct CountResult {
  MotifCountVector counts;
  WindowStats window;
};

// True when an event at `oldest` falls outside the window ending at `now`.
inline bool outside_window(Timestamp oldest, Timestamp now, Timestamp delta) noexcept {
  Timestamp span;
  if (__builtin_sub_overflow(now, oldest, &span)) return true;
  return span > delta;
}

/// A valid instance: three temporal edges in arrival order and their motif.
struct Instance {
  EdgeId first;
  EdgeId second;
  EdgeId third;
  MotifId motif;
};

// Direct scan over index triples; cubic in the window size. Test oracle.
MotifCountVector count_brute_force(const TemporalHypergraph& graph, Timestamp delta);

// Per-static-motif dynamic programming over merged occurrence sequences.
MotifCountVector count_dp(const TemporalHypergraph& graph, Timestamp delta);

using PObserver = std::function<void(EdgeId arrival, const ProjectedGraphP&)>;
using QObserver = std::function<void(EdgeId arrival, const ProjectedGraphQ&)>;

// Enumeration over the temporal projected graph P.
MotifCountVector count_thyme(const TemporalHypergraph& graph, Timestamp delta,
                             WindowStats* stats = nullptr, const PObserver& observer = {});

// Timestamp-combination counting over the projected graph Q of distinct sets.
MotifCountVector count_thyme_plus(const TemporalHypergraph& graph, Timestamp delta,
                                  WindowStats* stats = nullptr, const QObserver& observer = {});

CountResult count_motifs(Algorithm algorithm, const TemporalHypergraph& graph, Timestamp delta);

// Visits every valid instance once, via the P-graph enumeration.
void for_each_instance(const TemporalHypergraph& graph, Timestamp delta,
                       const std::function<void(const Instance&)>& visit);

struct OrderedPairs {
  std::uint64_t lt = 0;
  std::uint64_t gt = 0;
  friend bool operator==(const OrderedPairs&, const OrderedPairs&) = default;
};

// Pairs (t, t') in A x B with t < t' and t > t'. A and B must be ascending
// and disjoint (std::invalid_argument otherwise).
OrderedPairs count_ordered_timestamp_pairs(std::span<const Timestamp> a,
                                           std::span<const Timestamp> b);

/// Windowed counts of label subsequences of length 1..3 over at most three
/// labels (0, 1, 2).
class SequenceCounter {
 public:
  static constexpr int kMaxLabels = 3;

  void increment(int label);
  // Expires the oldest occurrence, which must carry `label`.
  void decrement(int label);
  void reset() { *this = SequenceCounter{}; }

  std::uint64_t count(int a) const { return c1_[a]; }
  std::uint64_t count(int a, int b) const { return c2_[a][b]; }
  std::uint64_t count(int a, int b, int c) const { return c3_[a][b][c]; }

 private:
  std::uint64_t c1_[kMaxLabels]{};
  std::uint64_t c2_[kMaxLabels][kMaxLabels]{};
  std::uint64_t c3_[kMaxLabels][kMaxLabels][kMaxLabels]{};
};

// Calls visit(a, b, c) once per unordered connected triple of distinct static
// edges, with c the largest id.
void for_each_static_triple(const StaticHypergraph& statics,
                            const std::function<void(EdgeId, EdgeId, EdgeId)>& visit);

// Valid-instance sequence counts for the static triple (a, b, c): entry p is
// the number of windowed sequences following the p-th order of
// kTripleOrders.
inline constexpr std::array<std::array<int, 3>, 6> kTripleOrders{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};
std::array<std::uint64_t, 6> triple_sequence_counts(const TemporalHypergraph& graph,
                                                    const StaticHypergraph& statics,
                                                    const std::array<EdgeId, 3>& triple,
                                                    Timestamp delta);

}  // namespace thyme
