#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thyme/hypergraph.hpp"
#include "thyme/logistic_regression.hpp"
#include "thyme/randomization.hpp"

namespace thyme {

/// Per-hyperedge motif participation counts, one row per temporal edge.
struct HyperedgeFeatureMatrix {
  std::size_t rows = 0;
  std::vector<int> column_ids;  // motif ids (temporal or static) per column
  std::vector<std::uint64_t> values;

  std::size_t cols() const noexcept { return column_ids.size(); }
  std::uint64_t at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return std::span<const std::uint64_t>(values).subspan(r * cols(), cols());
  }

  std::string to_csv() const;
};

enum class FeatureSet { thm96, thm26, shm26 };
FeatureSet parse_feature_set(const std::string& name);
std::string to_string(FeatureSet set);

// THM96: instances of each temporal motif that contain the hyperedge.
HyperedgeFeatureMatrix incident_counts(const TemporalHypergraph& graph, Timestamp delta);

// Columns with the largest sample variance, ties by ascending column id.
std::vector<std::size_t> select_top_variance(const HyperedgeFeatureMatrix& features, std::size_t k);
HyperedgeFeatureMatrix select_columns(const HyperedgeFeatureMatrix& features,
                                      std::span<const std::size_t> columns);

// SHM26: connected static triples containing the hyperedge's node set, per
// static class. Duplicated hyperedges share a row.
HyperedgeFeatureMatrix static_incident_counts(const TemporalHypergraph& graph);

HyperedgeFeatureMatrix compute_features(const TemporalHypergraph& graph, Timestamp delta,
                                        FeatureSet set);

/// Real hyperedges mixed with HyperCL fakes, on a tie-broken clock.
struct PredictionHypergraph {
  TemporalHypergraph graph;
  std::vector<int> labels;  // 1 real, 0 fake; aligned with graph edges
  Timestamp delta = 0;      // the window on the merged clock
  std::size_t train_size = 0;
};

PredictionHypergraph build_prediction_hypergraph(const TemporalHypergraph& graph, Timestamp delta,
                                                 RandomSeed seed);

struct PredictionDataset {
  LabelledSamples train;
  LabelledSamples test;
};

// First 80% of the merged edges (by time) train, the rest test.
PredictionDataset build_prediction_dataset(const TemporalHypergraph& graph, Timestamp delta,
                                           RandomSeed seed, FeatureSet set = FeatureSet::thm96);
PredictionDataset split_prediction_dataset(const PredictionHypergraph& merged,
                                           const HyperedgeFeatureMatrix& features);

struct PredictionReport {
  FeatureSet feature_set;
  double accuracy = 0.0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  RandomSeed seed;
};

// Runs the experiment for each feature set on one shared merged hypergraph.
std::vector<PredictionReport> run_prediction(const TemporalHypergraph& graph, Timestamp delta,
                                             RandomSeed seed, std::span<const FeatureSet> sets,
                                             const TrainOptions& options = {});

}  // namespace thyme
