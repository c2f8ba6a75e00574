#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "thyme/counting.hpp"
#include "thyme/motif.hpp"
#include "thyme/randomization.hpp"

namespace thyme {

using MotifReals = std::array<double, kNumMotifs>;

inline constexpr double kDefaultSignificanceEpsilon = 4.0;

// (real - rand) / (real + rand + epsilon), per motif.
MotifReals significance(const MotifCountVector& real, const MotifReals& random_mean,
                        double epsilon = kDefaultSignificanceEpsilon);

/// Unit-norm significance vector; all-zero input stays all-zero.
struct CharacteristicProfile {
  MotifReals values{};
};

CharacteristicProfile characteristic_profile(const MotifReals& significance);

// Pearson correlation over the 96 entries; NaN if either input is constant.
double cp_similarity(const CharacteristicProfile& a, const CharacteristicProfile& b);
double pearson(std::span<const double> a, std::span<const double> b);

struct ProfileOptions {
  std::size_t replicas = 5;
  double epsilon = kDefaultSignificanceEpsilon;
  RandomSeed seed{1};
  Algorithm algorithm = Algorithm::thyme_plus;
};

struct ProfileReport {
  MotifCountVector real;
  MotifReals random_mean{};
  MotifReals significance{};
  CharacteristicProfile profile;
  std::vector<RandomSeed> replica_seeds;
};

// Counts the input and `replicas` randomize_temporal copies, then builds
// the characteristic profile against the replica mean.
ProfileReport compute_profile(const TemporalHypergraph& graph, Timestamp delta,
                              const ProfileOptions& options);

// Repetition count |I(e)| -> number of distinct node sets with that count.
std::map<std::size_t, std::size_t> repetition_distribution(const TemporalHypergraph& graph);

// Mean of t_last - t_first over every window of n consecutive occurrences of
// the same node set; nullopt if no set occurs n times. Requires n >= 2.
std::optional<double> locality_intervals(const TemporalHypergraph& graph, std::size_t n);

// Fraction of connected static triples induced by at least one valid
// triple-inducing temporal instance; nullopt if there are none.
std::optional<double> valid_static_fraction(const TemporalHypergraph& graph, Timestamp delta);

/// Counts of one pair structure's three orderings.
struct PairOrderStats {
  PairStructure structure = PairStructure::none;
  std::array<MotifId, 3> motifs{};
  std::array<std::uint64_t, 3> counts{};
  std::array<double, 3> ratios{};  // count / group total; zero if the group is empty
};

std::array<PairOrderStats, 3> pair_order_stats(const MotifCountVector& counts);

}  // namespace thyme
