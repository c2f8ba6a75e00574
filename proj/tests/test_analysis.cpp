#include <cmath>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "thyme/analysis.hpp"

using namespace thyme;

namespace {

double norm(const MotifReals& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Fraction of connected static triples with at least one temporal instance
// made of one occurrence of each, by direct search.
std::optional<double> valid_fraction_oracle(const TemporalHypergraph& g, Timestamp delta) {
  const StaticHypergraph s = induce_static(g);
  std::set<std::array<EdgeId, 3>> hit;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        if (g.time(k) - g.time(i) > delta) continue;
        std::array<EdgeId, 3> key{s.static_of[i], s.static_of[j], s.static_of[k]};
        std::sort(key.begin(), key.end());
        if (key[0] != key[1] && key[1] != key[2]) hit.insert(key);
      }
    }
  }
  std::size_t total = 0, valid = 0;
  for (EdgeId a = 0; a < s.size(); ++a) {
    for (EdgeId b = a + 1; b < s.size(); ++b) {
      for (EdgeId c = b + 1; c < s.size(); ++c) {
        if (!oracle::connected(oracle::bag(s.edges[a]), oracle::bag(s.edges[b]), oracle::bag(s.edges[c]))) continue;
        ++total;
        valid += hit.count({a, b, c});
      }
    }
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(valid) / static_cast<double>(total);
}

}  // namespace

TEST_CASE("significance and profile") {
  MotifCountVector real;
  real.add(MotifId{1}, 10);
  real.add(MotifId{2}, 2);
  MotifReals rand{};
  rand[0] = 4.0;
  rand[1] = 6.0;
  rand[2] = 3.0;
  const auto sig = significance(real, rand);
  CHECK(sig[0] == doctest::Approx(6.0 / 18.0));
  CHECK(sig[1] == doctest::Approx(-4.0 / 12.0));
  CHECK(sig[2] == doctest::Approx(-3.0 / 7.0));
  CHECK(sig[3] == 0.0);
  CHECK_THROWS_AS(significance(real, rand, 0.0), std::invalid_argument);

  const auto cp = characteristic_profile(sig);
  CHECK(norm(cp.values) == doctest::Approx(1.0));
  CHECK(norm(characteristic_profile(MotifReals{}).values) == 0.0);
  CHECK(cp_similarity(cp, cp) == doctest::Approx(1.0));
  CHECK(std::isnan(cp_similarity(cp, CharacteristicProfile{})));
}

TEST_CASE("pearson") {
  const std::vector<double> a{1, 2, 3, 4}, b{2, 4, 6, 8}, c{4, 3, 2, 1};
  CHECK(pearson(a, b) == doctest::Approx(1.0));
  CHECK(pearson(a, c) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(pearson(a, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("profile pipeline is seeded") {
  const auto g = oracle::random_graph(8, 80);
  ProfileOptions opts;
  opts.replicas = 3;
  opts.seed = RandomSeed{5};
  const auto a = compute_profile(g, 3, opts);
  const auto b = compute_profile(g, 3, opts);
  CHECK(a.profile.values == b.profile.values);
  CHECK(a.replica_seeds.size() == 3);
  CHECK(a.real == count_brute_force(g, 3));
  const double n = norm(a.profile.values);
  CHECK((n == 0.0 || std::abs(n - 1.0) < 1e-12));
  opts.replicas = 0;
  CHECK_THROWS_AS(compute_profile(g, 3, opts), std::invalid_argument);
}

TEST_CASE("worked example statistics") {
  const auto g = oracle::worked_example();
  const auto rep = repetition_distribution(g);
  CHECK(rep == std::map<std::size_t, std::size_t>{{1, 3}, {2, 1}});
  CHECK(locality_intervals(g, 2) == doctest::Approx(2.0));
  CHECK(!locality_intervals(g, 3).has_value());
  CHECK_THROWS_AS(locality_intervals(g, 1), std::invalid_argument);
  CHECK(*valid_static_fraction(g, oracle::kWorkedDelta) == doctest::Approx(0.5));

  const auto counts = count_thyme_plus(g, oracle::kWorkedDelta);
  const auto orders = pair_order_stats(counts);
  CHECK(orders[2].structure == PairStructure::proper_overlap);
  CHECK(orders[2].counts[2] == 1);
  CHECK(orders[2].ratios[2] == doctest::Approx(1.0));
  CHECK(orders[0].ratios[0] == 0.0);
}

TEST_CASE("valid fraction matches direct search and grows with delta") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = oracle::random_graph(seed, 35);
    double last = -1.0;
    for (Timestamp delta : {0, 1, 2, 4, 8, 16, 1000}) {
      const auto got = valid_static_fraction(g, delta);
      const auto want = valid_fraction_oracle(g, delta);
      REQUIRE(got.has_value() == want.has_value());
      if (!got) break;
      CHECK(*got == doctest::Approx(*want));
      CHECK(*got >= last);
      last = *got;
    }
  }
}
