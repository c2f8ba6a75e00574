#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "thyme/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "thyme");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = thyme::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string example_file() {
  const fs::path dir = THYME_TEST_TMPDIR;
  fs::create_directories(dir);
  const fs::path p = dir / "example.tsv";
  std::ofstream(p) << "1\t1,2\n2\t2,3\n3\t1,2\n4\t3,4\n6\t1,2,3\n";
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("count writes one row per motif") {
  const auto input = example_file();
  for (const char* algo : {"bruteforce", "dp", "thyme", "thyme-plus"}) {
    const Run r = run({"count", "-i", input, "-d", "3", "--algo", algo});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 97);
    CHECK(rows[0] == "motif_id,count");
    CHECK(rows[95] == "95,1");
  }
}

TEST_CASE("count json carries run metadata") {
  const Run r = run({"count", "-i", example_file(), "-d", "3", "--json", "--dataset", "tiny"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dataset"] == "tiny");
  CHECK(doc["delta"] == 3);
  CHECK(doc["algorithm"] == "thyme-plus");
  CHECK(doc["total"] == 4);
  CHECK(doc["counts"].size() == 96);
  CHECK(doc.contains("wall_time_ms"));
  CHECK(doc.contains("peak_projected_nodes"));
  CHECK(doc.contains("isa"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == thyme::cli::kUsage);
  CHECK(run({"count", "-d", "3"}).code == thyme::cli::kUsage);
  CHECK(run({"count", "-i", example_file(), "-d", "-1"}).code == thyme::cli::kUsage);
  CHECK(run({"count", "-i", example_file(), "-d", "3", "--algo", "fast"}).code == thyme::cli::kUsage);
  const Run missing = run({"count", "-i", "/nonexistent/file.tsv", "-d", "1"});
  CHECK(missing.code == thyme::cli::kDataError);
  CHECK(missing.err.find("/nonexistent/file.tsv") != std::string::npos);

  const fs::path bad = fs::path(THYME_TEST_TMPDIR) / "bad.tsv";
  std::ofstream(bad) << "1\t1,2\noops\n";
  const Run r = run({"count", "-i", bad.string(), "-d", "1"});
  CHECK(r.code == thyme::cli::kDataError);
  CHECK(r.err.find(":2:") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("motif table and stats") {
  const Run table = run({"motif-table"});
  CHECK(table.code == 0);
  CHECK(lines(table.out).size() == 97);

  const auto input = example_file();
  CHECK(run({"stats", "-i", input, "--what", "repetition"}).out == "repetition,node_sets\n1,3\n2,1\n");
  CHECK(run({"stats", "-i", input, "--what", "valid-fraction", "-d", "3"}).out == "delta,valid_fraction\n3,0.5\n");
  CHECK(run({"stats", "-i", input, "--what", "locality", "-n", "2"}).out == "run_length,mean_interval\n2,2\n");
  CHECK(lines(run({"stats", "-i", input, "--what", "pair-orders", "-d", "3"}).out).size() == 10);
}

TEST_CASE("randomize, profile and similarity") {
  const fs::path dir = THYME_TEST_TMPDIR;
  const auto input = example_file();
  const fs::path rand = dir / "rand.tsv";
  REQUIRE(run({"randomize", "-i", input, "--seed", "4", "-o", rand.string()}).code == 0);
  const auto loaded = thyme::parse_tsv(rand, thyme::RandomSeed{1});
  CHECK(loaded.graph.size() == 5);

  const fs::path pa = dir / "a.json", pb = dir / "b.json";
  REQUIRE(run({"profile", "-i", input, "-d", "3", "--replicas", "2", "--dataset", "a", "-o", pa.string()}).code == 0);
  REQUIRE(run({"profile", "-i", rand.string(), "-d", "3", "--replicas", "2", "--dataset", "b", "-o", pb.string()}).code == 0);
  std::ifstream in(pa);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["profile"].size() == 96);
  CHECK(doc["replica_seeds"].size() == 2);

  const Run sim = run({"similarity", pa.string(), pb.string()});
  REQUIRE(sim.code == 0);
  const auto rows = lines(sim.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "dataset,a,b");
  CHECK(rows[1].rfind("a,1,", 0) == 0);
}

TEST_CASE("features, predict and bench") {
  thyme::UniformHypergraphConfig cfg;
  cfg.node_count = 25;
  cfg.edge_count = 120;
  const auto g = thyme::uniform_temporal_hypergraph(cfg, thyme::RandomSeed{3});
  const fs::path p = fs::path(THYME_TEST_TMPDIR) / "uniform.tsv";
  thyme::write_tsv(p, g);

  const Run f = run({"features", "-i", p.string(), "-d", "4", "--set", "thm26"});
  REQUIRE(f.code == 0);
  const auto rows = lines(f.out);
  CHECK(rows.size() == g.size() + 1);

  const Run pr = run({"predict", "-i", p.string(), "-d", "4", "--epochs", "50"});
  REQUIRE(pr.code == 0);
  const auto reports = nlohmann::json::parse(pr.out);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0]["feature_set"] == "thm96");
  CHECK(reports[2]["feature_set"] == "shm26");

  const Run b = run({"bench", "-i", p.string(), "--deltas", "2,6", "--algos", "dp,thyme-plus"});
  REQUIRE(b.code == 0);
  const auto brows = lines(b.out);
  REQUIRE(brows.size() == 5);
  CHECK(brows[0].rfind("dataset,algorithm,delta,wall_ms,peak_rss_kb", 0) == 0);
  CHECK(brows[1].find(",dp,2,") != std::string::npos);
}
