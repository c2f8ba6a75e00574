#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "thyme/randomization.hpp"

using namespace thyme;

namespace {

std::multiset<std::size_t> size_multiset(const TemporalHypergraph& g) {
  const auto s = hyperedge_sizes(g);
  return {s.begin(), s.end()};
}

std::vector<Timestamp> times_of(const TemporalHypergraph& g) {
  std::vector<Timestamp> t;
  for (const auto& e : g.edges()) t.push_back(e.time);
  return t;
}

}  // namespace

TEST_CASE("hypercl keeps sizes and draws distinct nodes") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = oracle::random_graph(seed, 80);
    const auto degrees = temporal_degrees(g);
    const auto sizes = hyperedge_sizes(g);
    const auto sets = hypercl(degrees, sizes, RandomSeed{seed});
    REQUIRE(sets.size() == sizes.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      CHECK(sets[i].size() == sizes[i]);
      CHECK(std::is_sorted(sets[i].begin(), sets[i].end()));
      CHECK(std::adjacent_find(sets[i].begin(), sets[i].end()) == sets[i].end());
      for (NodeId v : sets[i]) CHECK(degrees[v] > 0);
    }
    CHECK(hypercl(degrees, sizes, RandomSeed{seed}) == sets);
  }
}

TEST_CASE("hypercl follows the degree weights") {
  // Node 0 holds half the degree mass; singleton draws should pick it about
  // half the time.
  std::vector<std::uint64_t> degrees{5000, 1000, 1000, 1000, 1000, 1000};
  std::vector<std::size_t> sizes(10000, 1);
  const auto sets = hypercl(degrees, sizes, RandomSeed{17});
  const auto hits = std::count_if(sets.begin(), sets.end(), [](const NodeSet& s) { return s[0] == 0; });
  CHECK(hits > 4700);
  CHECK(hits < 5300);
}

TEST_CASE("hypercl errors") {
  const std::vector<std::uint64_t> degrees{1, 1, 0};
  CHECK_THROWS_AS(hypercl(degrees, std::vector<std::size_t>{3}, RandomSeed{1}), std::invalid_argument);
  const std::vector<std::uint64_t> skewed{3, 0, 0};
  CHECK_THROWS_AS(hypercl(skewed, std::vector<std::size_t>{3}, RandomSeed{1}), GenerationError);
  const std::vector<std::uint64_t> heavy{100, 1, 1};
  // Concentrated weights still finish through the exact sampler.
  const auto sets = hypercl(heavy, std::vector<std::size_t>(34, 3), RandomSeed{2});
  for (const auto& s : sets) CHECK(s == NodeSet{0, 1, 2});
  const std::vector<std::uint64_t> wrong_total{100, 1, 1};
  CHECK_THROWS_AS(hypercl(wrong_total, std::vector<std::size_t>{3}, RandomSeed{1}), std::invalid_argument);
}

TEST_CASE("temporal randomization preserves marginals") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = oracle::random_graph(seed, 60);
    const auto r = randomize_temporal(g, RandomSeed{seed});
    CHECK(r.size() == g.size());
    CHECK(r.node_count() == g.node_count());
    CHECK(size_multiset(r) == size_multiset(g));
    CHECK(times_of(r) == times_of(g));

    const auto s = shuffle_timestamps(g, RandomSeed{seed});
    CHECK(times_of(s) == times_of(g));
    std::multiset<NodeSet> a, b;
    for (const auto& e : g.edges()) a.insert(e.nodes);
    for (const auto& e : s.edges()) b.insert(e.nodes);
    CHECK(a == b);
    CHECK(temporal_degrees(s) == temporal_degrees(g));
  }
}

TEST_CASE("seeds") {
  const auto g = oracle::random_graph(5, 60);
  CHECK(randomize_temporal(g, RandomSeed{1}) == randomize_temporal(g, RandomSeed{1}));
  CHECK(!(randomize_temporal(g, RandomSeed{1}) == randomize_temporal(g, RandomSeed{2})));
  std::set<std::uint64_t> streams;
  for (std::uint64_t s = 0; s < 100; ++s) streams.insert(derive_seed(RandomSeed{42}, s).value);
  CHECK(streams.size() == 100);

  ::unsetenv("THYME_SEED");
  CHECK(seed_from_env(RandomSeed{9}) == RandomSeed{9});
  ::setenv("THYME_SEED", "123", 1);
  CHECK(seed_from_env(RandomSeed{9}) == RandomSeed{123});
  ::setenv("THYME_SEED", "12x", 1);
  CHECK_THROWS_AS(seed_from_env(RandomSeed{9}), std::invalid_argument);
  ::unsetenv("THYME_SEED");
}
