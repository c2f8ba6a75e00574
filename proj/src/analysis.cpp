#include "thyme/analysis.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <algorithm>

namespace thyme {

MotifReals significance(const MotifCountVector& real, const MotifReals& random_mean,
                        double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("significance: epsilon must be positive");
  MotifReals out{};
  for (int m = 1; m <= kNumMotifs; ++m) {
    const auto idx = MotifId{m}.index();
    const double r = static_cast<double>(real[MotifId{m}]);
    const double z = random_mean[idx];
    if (z < 0.0) throw std::invalid_argument("significance: random mean must be non-negative");
    out[idx] = (r - z) / (r + z + epsilon);
  }
  return out;
}

CharacteristicProfile characteristic_profile(const MotifReals& sig) {
  double sq = 0.0;
  for (double v : sig) sq += v * v;
  CharacteristicProfile cp;
  if (sq == 0.0) return cp;
  const double norm = std::sqrt(sq);
  for (std::size_t i = 0; i < sig.size(); ++i) cp.values[i] = sig[i] / norm;
  return cp;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("pearson: size mismatch");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double r = sab / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

double cp_similarity(const CharacteristicProfile& a, const CharacteristicProfile& b) {
  return pearson(a.values, b.values);
}

ProfileReport compute_profile(const TemporalHypergraph& graph, Timestamp delta,
                              const ProfileOptions& options) {
  if (options.replicas == 0) throw std::invalid_argument("compute_profile: replicas must be >= 1");
  ProfileReport report;
  report.real = count_motifs(options.algorithm, graph, delta).counts;
  MotifReals sum{};
  for (std::size_t r = 0; r < options.replicas; ++r) {
    const RandomSeed seed = derive_seed(options.seed, r);
    report.replica_seeds.push_back(seed);
    const TemporalHypergraph random = randomize_temporal(graph, seed);
    const MotifCountVector counts = count_motifs(options.algorithm, random, delta).counts;
    for (int m = 1; m <= kNumMotifs; ++m) {
      sum[MotifId{m}.index()] += static_cast<double>(counts[MotifId{m}]);
    }
  }
  for (double& v : sum) v /= static_cast<double>(options.replicas);
  report.random_mean = sum;
  report.significance = significance(report.real, report.random_mean, options.epsilon);
  report.profile = characteristic_profile(report.significance);
  return report;
}

std::map<std::size_t, std::size_t> repetition_distribution(const TemporalHypergraph& graph) {
  const StaticHypergraph statics = induce_static(graph);
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& occ : statics.occurrences) ++histogram[occ.size()];
  return histogram;
}

std::optional<double> locality_intervals(const TemporalHypergraph& graph, std::size_t n) {
  if (n < 2) throw std::invalid_argument("locality_intervals: run length must be at least 2");
  const StaticHypergraph statics = induce_static(graph);
  long double total = 0.0L;
  std::uint64_t runs = 0;
  for (const auto& occ : statics.occurrences) {
    for (std::size_t s = 0; s + n <= occ.size(); ++s) {
      total += static_cast<long double>(graph.time(occ[s + n - 1]) - graph.time(occ[s]));
      ++runs;
    }
  }
  if (runs == 0) return std::nullopt;
  return static_cast<double>(total / static_cast<long double>(runs));
}

std::optional<double> valid_static_fraction(const TemporalHypergraph& graph, Timestamp delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  const StaticHypergraph statics = induce_static(graph);
  std::uint64_t triples = 0;
  std::uint64_t induced = 0;
  for_each_static_triple(statics, [&](EdgeId a, EdgeId b, EdgeId c) {
    ++triples;
    const auto seq = triple_sequence_counts(graph, statics, {a, b, c}, delta);
    for (std::uint64_t n : seq) {
      if (n > 0) {
        ++induced;
        break;
      }
    }
  });
  if (triples == 0) return std::nullopt;
  return static_cast<double>(induced) / static_cast<double>(triples);
}

std::array<PairOrderStats, 3> pair_order_stats(const MotifCountVector& counts) {
  std::array<PairOrderStats, 3> out{};
  const MotifTable& table = motif_table();
  for (std::size_t g = 0; g < 3; ++g) {
    PairOrderStats& stats = out[g];
    std::uint64_t total = 0;
    for (std::size_t o = 0; o < 3; ++o) {
      const MotifId id{87 + static_cast<int>(3 * g + o)};
      stats.motifs[o] = id;
      stats.counts[o] = counts[id];
      total += counts[id];
    }
    stats.structure = table.entry(stats.motifs[0]).structure;
    for (std::size_t o = 0; o < 3; ++o) {
      stats.ratios[o] = total == 0 ? 0.0 : static_cast<double>(stats.counts[o]) / static_cast<double>(total);
    }
  }
  return out;
}

}  // namespace thyme
