#include "thyme/features.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thyme/counting.hpp"
#include "thyme/io.hpp"
#include "thyme/motif.hpp"

namespace thyme {

std::string HyperedgeFeatureMatrix::to_csv() const {
  std::ostringstream out;
  out << "edge";
  for (int id : column_ids) out << ',' << id;
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    out << r;
    for (std::size_t c = 0; c < cols(); ++c) out << ',' << at(r, c);
    out << '\n';
  }
  return out.str();
}

FeatureSet parse_feature_set(const std::string& name) {
  if (name == "thm96") return FeatureSet::thm96;
  if (name == "thm26") return FeatureSet::thm26;
  if (name == "shm26") return FeatureSet::shm26;
  throw std::invalid_argument("unknown feature set '" + name + "'");
}

std::string to_string(FeatureSet set) {
  switch (set) {
    case FeatureSet::thm96:
      return "thm96";
    case FeatureSet::thm26:
      return "thm26";
    case FeatureSet::shm26:
      return "shm26";
  }
  return "?";
}

HyperedgeFeatureMatrix incident_counts(const TemporalHypergraph& graph, Timestamp delta) {
  HyperedgeFeatureMatrix f;
  f.rows = graph.size();
  f.column_ids.resize(kNumMotifs);
  std::iota(f.column_ids.begin(), f.column_ids.end(), 1);
  f.values.assign(f.rows * kNumMotifs, 0);
  for_each_instance(graph, delta, [&](const Instance& inst) {
    const std::size_t c = inst.motif.index();
    ++f.at(inst.first, c);
    ++f.at(inst.second, c);
    ++f.at(inst.third, c);
  });
  return f;
}

std::vector<std::size_t> select_top_variance(const HyperedgeFeatureMatrix& features, std::size_t k) {
  if (k > features.cols()) throw std::invalid_argument("select_top_variance: k exceeds column count");
  std::vector<double> variance(features.cols(), 0.0);
  if (features.rows > 1) {
    const double n = static_cast<double>(features.rows);
    for (std::size_t c = 0; c < features.cols(); ++c) {
      double mean = 0.0;
      for (std::size_t r = 0; r < features.rows; ++r) mean += static_cast<double>(features.at(r, c));
      mean /= n;
      double ss = 0.0;
      for (std::size_t r = 0; r < features.rows; ++r) {
        const double d = static_cast<double>(features.at(r, c)) - mean;
        ss += d * d;
      }
      variance[c] = ss / (n - 1.0);
    }
  }
  std::vector<std::size_t> order(features.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (variance[a] != variance[b]) return variance[a] > variance[b];
    return features.column_ids[a] < features.column_ids[b];
  });
  order.resize(k);
  return order;
}

HyperedgeFeatureMatrix select_columns(const HyperedgeFeatureMatrix& features,
                                      std::span<const std::size_t> columns) {
  HyperedgeFeatureMatrix out;
  out.rows = features.rows;
  for (std::size_t c : columns) out.column_ids.push_back(features.column_ids.at(c));
  out.values.reserve(out.rows * columns.size());
  for (std::size_t r = 0; r < features.rows; ++r) {
    for (std::size_t c : columns) out.values.push_back(features.at(r, c));
  }
  return out;
}

HyperedgeFeatureMatrix static_incident_counts(const TemporalHypergraph& graph) {
  const StaticHypergraph statics = induce_static(graph);
  std::vector<std::uint64_t> per_static(statics.size() * kNumStaticMotifs, 0);
  const MotifTable& table = motif_table();
  for_each_static_triple(statics, [&](EdgeId a, EdgeId b, EdgeId c) {
    const RegionPattern p = region_pattern(statics.edges[a], statics.edges[b], statics.edges[c]);
    const auto cls = table.static_class_of(p);
    if (!cls) throw std::logic_error("static triple without a static class");
    for (EdgeId e : {a, b, c}) ++per_static[e * kNumStaticMotifs + cls->index()];
  });

  HyperedgeFeatureMatrix f;
  f.rows = graph.size();
  f.column_ids.resize(kNumStaticMotifs);
  std::iota(f.column_ids.begin(), f.column_ids.end(), 1);
  f.values.reserve(f.rows * kNumStaticMotifs);
  for (EdgeId i = 0; i < graph.size(); ++i) {
    const auto first = per_static.begin() + static_cast<std::ptrdiff_t>(statics.static_of[i] * kNumStaticMotifs);
    f.values.insert(f.values.end(), first, first + kNumStaticMotifs);
  }
  return f;
}

HyperedgeFeatureMatrix compute_features(const TemporalHypergraph& graph, Timestamp delta,
                                        FeatureSet set) {
  switch (set) {
    case FeatureSet::thm96:
      return incident_counts(graph, delta);
    case FeatureSet::thm26: {
      const HyperedgeFeatureMatrix all = incident_counts(graph, delta);
      const auto columns = select_top_variance(all, kNumStaticMotifs);
      return select_columns(all, columns);
    }
    case FeatureSet::shm26:
      return static_incident_counts(graph);
  }
  throw std::invalid_argument("unknown feature set");
}

PredictionHypergraph build_prediction_hypergraph(const TemporalHypergraph& graph, Timestamp delta,
                                                 RandomSeed seed) {
  if (graph.empty()) throw std::invalid_argument("prediction needs a non-empty hypergraph");
  const auto degrees = temporal_degrees(graph);
  const auto sizes = hyperedge_sizes(graph);
  std::vector<NodeSet> fakes = hypercl(degrees, sizes, derive_seed(seed, 0));

  Rng rng(derive_seed(seed, 1).value);
  std::uniform_int_distribution<Timestamp> when(graph.time(0), graph.time(graph.size() - 1));

  std::vector<TemporalHyperedge> merged;
  std::vector<int> labels;
  merged.reserve(2 * graph.size());
  for (const auto& e : graph.edges()) {
    merged.push_back(e);
    labels.push_back(1);
  }
  for (auto& nodes : fakes) {
    merged.push_back({std::move(nodes), when(rng)});
    labels.push_back(0);
  }
  std::vector<std::size_t> order(merged.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return merged[a].time < merged[b].time; });
  std::vector<TemporalHyperedge> sorted;
  std::vector<int> sorted_labels;
  sorted.reserve(merged.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(merged[i]));
    sorted_labels.push_back(labels[i]);
  }

  TieBreakResult tied = break_ties(std::move(sorted), derive_seed(seed, 2));
  PredictionHypergraph out;
  out.labels.reserve(tied.source.size());
  for (std::size_t src : tied.source) out.labels.push_back(sorted_labels[src]);
  out.graph = TemporalHypergraph(graph.node_count(), std::move(tied.edges));
  out.delta = tied.scale.scale_delta(delta);
  out.train_size = out.labels.size() * 8 / 10;
  return out;
}

PredictionDataset split_prediction_dataset(const PredictionHypergraph& merged,
                                           const HyperedgeFeatureMatrix& features) {
  if (features.rows != merged.labels.size()) {
    throw std::invalid_argument("feature rows do not match the merged hypergraph");
  }
  PredictionDataset out;
  out.train.cols = features.cols();
  out.test.cols = features.cols();
  std::vector<double> row(features.cols());
  for (std::size_t r = 0; r < features.rows; ++r) {
    const auto counts = features.row(r);
    std::transform(counts.begin(), counts.end(), row.begin(),
                   [](std::uint64_t v) { return static_cast<double>(v); });
    (r < merged.train_size ? out.train : out.test).add(row, merged.labels[r]);
  }
  return out;
}

PredictionDataset build_prediction_dataset(const TemporalHypergraph& graph, Timestamp delta,
                                           RandomSeed seed, FeatureSet set) {
  const PredictionHypergraph merged = build_prediction_hypergraph(graph, delta, seed);
  return split_prediction_dataset(merged, compute_features(merged.graph, merged.delta, set));
}

std::vector<PredictionReport> run_prediction(const TemporalHypergraph& graph, Timestamp delta,
                                             RandomSeed seed, std::span<const FeatureSet> sets,
                                             const TrainOptions& options) {
  const PredictionHypergraph merged = build_prediction_hypergraph(graph, delta, seed);
  std::vector<PredictionReport> reports;
  for (FeatureSet set : sets) {
    const PredictionDataset data =
        split_prediction_dataset(merged, compute_features(merged.graph, merged.delta, set));
    PredictionReport report{set, 0.0, data.train.rows(), data.test.rows(), seed};
    report.accuracy = train_eval_logreg(data.train, data.test, options.epochs, options.learning_rate);
    reports.push_back(report);
  }
  return reports;
}

}  // namespace thyme
