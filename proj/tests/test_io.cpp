#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "thyme/counting.hpp"
#include "thyme/io.hpp"

using namespace thyme;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = THYME_TEST_TMPDIR;
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Windowed triples in the tie semantics: equal timestamps span zero, and a
// triple is any three distinct input edges whose time span fits.
std::uint64_t tie_aware_total(const std::vector<TemporalHyperedge>& edges, Timestamp delta) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (std::size_t k = j + 1; k < edges.size(); ++k) {
        const Timestamp lo = std::min({edges[i].time, edges[j].time, edges[k].time});
        const Timestamp hi = std::max({edges[i].time, edges[j].time, edges[k].time});
        if (hi - lo > delta) continue;
        n += oracle::connected(oracle::bag(edges[i].nodes), oracle::bag(edges[j].nodes),
                               oracle::bag(edges[k].nodes));
      }
    }
  }
  return n;
}

}  // namespace

TEST_CASE("tsv parsing") {
  std::istringstream in(
      "# comment\n"
      "3\t10,20\r\n"
      "\n"
      "1\t20, 30,20\n"
      "5\t40\n");
  const auto loaded = parse_tsv(in, RandomSeed{1});
  const auto& g = loaded.graph;
  REQUIRE(g.size() == 3);
  CHECK(loaded.scale.identity());
  CHECK(g.time(0) == 1);
  // Labels intern in file order: 10 -> 0, 20 -> 1, 30 -> 2, 40 -> 3.
  CHECK(loaded.node_labels == std::vector<std::string>{"10", "20", "30", "40"});
  CHECK(std::vector<NodeId>(g.nodes(0).begin(), g.nodes(0).end()) == std::vector<NodeId>{1, 2});
  CHECK(std::vector<NodeId>(g.nodes(1).begin(), g.nodes(1).end()) == std::vector<NodeId>{0, 1});
}

TEST_CASE("tsv errors carry line numbers") {
  auto fails_at = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      parse_tsv(in, RandomSeed{1}, "mem");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.source() == "mem");
      return;
    }
    FAIL("no ParseError for: " << text);
  };
  fails_at("1\t1,2\n2 1,2\n", 2);
  fails_at("x\t1\n", 1);
  fails_at("1\t\n", 1);
  fails_at("1\t1,,2\n", 1);
  fails_at("1\t-3\n", 1);
  fails_at("# c\n1\t1\n99999999999999999999\t1\n", 3);
}

TEST_CASE("tie breaking preserves windowed triples") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 60; ++round) {
    std::vector<TemporalHyperedge> edges;
    Timestamp t = 0;
    for (int i = 0; i < 25; ++i) {
      if (rng() % 3 == 0) t += static_cast<Timestamp>(rng() % 3);
      NodeSet s{static_cast<NodeId>(rng() % 6)};
      s.push_back(static_cast<NodeId>(rng() % 6));
      normalize_node_set(s);
      edges.push_back({s, t});
    }
    for (Timestamp delta : {0, 1, 2, 4}) {
      const auto tied = break_ties(edges, RandomSeed{static_cast<std::uint64_t>(round)});
      const TemporalHypergraph g(6, tied.edges);
      CHECK(count_thyme_plus(g, tied.scale.scale_delta(delta)).total() == tie_aware_total(edges, delta));
    }
  }
  std::vector<TemporalHyperedge> unsorted{{{0}, 2}, {{0}, 1}};
  CHECK_THROWS_AS(break_ties(unsorted, RandomSeed{1}), std::invalid_argument);
}

TEST_CASE("tie order depends only on the seed") {
  std::vector<TemporalHyperedge> edges;
  for (NodeId i = 0; i < 10; ++i) edges.push_back({{i}, 7});
  const auto a = break_ties(edges, RandomSeed{1});
  const auto b = break_ties(edges, RandomSeed{1});
  CHECK(a.edges == b.edges);
  CHECK(a.scale.factor == 19);
  CHECK(a.scale.slack == 9);
  for (std::size_t i = 1; i < a.edges.size(); ++i) CHECK(a.edges[i - 1].time < a.edges[i].time);
}

TEST_CASE("trio format round trip and errors") {
  const fs::path dir = temp_dir();
  const std::string prefix = (dir / "tiny").string();
  write_file(prefix + "-nverts.txt", "2\n2\n2\n2\n3\n");
  write_file(prefix + "-simplices.txt", "1\n2\n2\n3\n1\n2\n3\n4\n1\n2\n3\n");
  write_file(prefix + "-times.txt", "1\n2\n3\n4\n6\n");
  const auto trio = parse_trio(prefix, RandomSeed{1});
  const auto g = oracle::worked_example();
  CHECK(trio.graph.size() == 5);
  CHECK(count_thyme_plus(trio.graph, 3) == count_thyme_plus(g, 3));

  const fs::path tsv = dir / "tiny.tsv";
  write_tsv(tsv, trio.graph);
  const auto back = parse_tsv(tsv, RandomSeed{1});
  CHECK(back.graph == trio.graph);

  write_file(prefix + "-times.txt", "1\n2\n3\n");
  try {
    parse_trio(prefix, RandomSeed{1});
    FAIL("expected a length mismatch");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("times") != std::string::npos);
  }
  write_file(prefix + "-times.txt", "1\n2\n3\n4\n6\n");
  write_file(prefix + "-simplices.txt", "1\n2\n");
  CHECK_THROWS_AS(parse_trio(prefix, RandomSeed{1}), ParseError);
  CHECK_THROWS_AS(parse_trio((dir / "missing").string(), RandomSeed{1}), ParseError);
  CHECK(parse_format("trio") == InputFormat::trio);
  CHECK_THROWS_AS(parse_format("csv"), std::invalid_argument);
}

TEST_CASE("hypergraph invariants") {
  CHECK_THROWS_AS(TemporalHypergraph(3, {{{0, 1}, 2}, {{1}, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalHypergraph(3, {{{}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalHypergraph(3, {{{1, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(TemporalHypergraph(3, {{{3}, 1}}), std::invalid_argument);

  const StaticHypergraph s = induce_static(oracle::worked_example());
  CHECK(s.size() == 4);
  CHECK(s.multiplicity(0) == 2);
  CHECK(s.static_of == std::vector<EdgeId>{0, 1, 0, 2, 3});
  CHECK(s.overlap_pair_count() == 5);
}
