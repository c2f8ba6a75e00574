#include "cli.hpp"

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thyme/analysis.hpp"
#include "thyme/counting.hpp"
#include "thyme/features.hpp"
#include "thyme/io.hpp"
#include "thyme/motif.hpp"
#include "thyme/randomization.hpp"
#include "thyme/simd.hpp"
#include "thyme/synthetic.hpp"

namespace thyme::cli {
namespace {

using json = nlohmann::ordered_json;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string format = "tsv";
  std::string dataset;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("-i,--input", opts.path, "Input hypergraph (TSV file or trio prefix)")->required();
  cmd->add_option("--format", opts.format, "Input format")->check(CLI::IsMember({"tsv", "trio"}));
  cmd->add_option("--dataset", opts.dataset, "Dataset name recorded in outputs");
}

std::string dataset_name(const InputOptions& opts) {
  if (!opts.dataset.empty()) return opts.dataset;
  return std::filesystem::path(opts.path).filename().string();
}

LoadedHypergraph load(const InputOptions& opts, RandomSeed seed) {
  return load_hypergraph(opts.path, parse_format(opts.format), seed);
}

// Writes to --out when given, else to the command's stdout stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string format_real(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

json counts_json(const MotifCountVector& counts) {
  json arr = json::array();
  for (std::uint64_t c : counts.values()) arr.push_back(c);
  return arr;
}

json reals_json(const MotifReals& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

void write_counts_csv(std::ostream& out, const MotifCountVector& counts) {
  out << "motif_id,count\n";
  for (int m = 1; m <= kNumMotifs; ++m) out << m << ',' << counts[MotifId{m}] << '\n';
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

Timestamp parse_delta(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--delta", "not an integer: " + text);
  }
  if (used != text.size() || v < 0) throw CLI::ValidationError("--delta", "must be a non-negative integer");
  return static_cast<Timestamp>(v);
}

// ---------------------------------------------------------------------------

struct CountCommand {
  InputOptions input;
  std::string algo = "thyme-plus";
  Timestamp delta = 0;
  std::string out_path;
  bool as_json = false;
  std::uint64_t seed = 0;
};

int run_count(const CountCommand& cmd, std::ostream& out) {
  const RandomSeed seed{cmd.seed};
  const LoadedHypergraph data = load(cmd.input, seed);
  const Algorithm algorithm = parse_algorithm(cmd.algo);
  const Timestamp internal_delta = data.scale.scale_delta(cmd.delta);

  const auto start = std::chrono::steady_clock::now();
  const CountResult result = count_motifs(algorithm, data.graph, internal_delta);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Sink sink(cmd.out_path, out);
  if (!cmd.as_json) {
    write_counts_csv(*sink, result.counts);
    return kSuccess;
  }
  json doc;
  doc["dataset"] = dataset_name(cmd.input);
  doc["delta"] = cmd.delta;
  doc["internal_delta"] = internal_delta;
  doc["time_scale"] = {{"factor", data.scale.factor}, {"slack", data.scale.slack}};
  doc["algorithm"] = std::string(to_string(algorithm));
  doc["seed"] = cmd.seed;
  doc["isa"] = std::string(simd::isa_name(simd::kernels().isa));
  doc["wall_time_ms"] = ms;
  doc["peak_projected_nodes"] = result.window.peak_nodes;
  doc["peak_projected_edges"] = result.window.peak_edges;
  doc["total"] = result.counts.total();
  doc["counts"] = counts_json(result.counts);
  *sink << doc.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct RandomizeCommand {
  InputOptions input;
  std::string mode = "hypercl";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_randomize(const RandomizeCommand& cmd, std::ostream& out) {
  const RandomSeed seed{cmd.seed};
  const LoadedHypergraph data = load(cmd.input, seed);
  const TemporalHypergraph result = cmd.mode == "shuffle" ? shuffle_timestamps(data.graph, seed)
                                                          : randomize_temporal(data.graph, seed);
  Sink sink(cmd.out_path, out);
  *sink << "# randomized (" << cmd.mode << ") seed=" << cmd.seed << '\n';
  write_tsv(*sink, result);
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct ProfileCommand {
  InputOptions input;
  Timestamp delta = 0;
  std::size_t replicas = 5;
  double epsilon = kDefaultSignificanceEpsilon;
  std::string algo = "thyme-plus";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_profile(const ProfileCommand& cmd, std::ostream& out) {
  const RandomSeed seed{cmd.seed};
  const LoadedHypergraph data = load(cmd.input, seed);
  ProfileOptions options;
  options.replicas = cmd.replicas;
  options.epsilon = cmd.epsilon;
  options.seed = seed;
  options.algorithm = parse_algorithm(cmd.algo);
  const ProfileReport report =
      compute_profile(data.graph, data.scale.scale_delta(cmd.delta), options);

  json doc;
  doc["dataset"] = dataset_name(cmd.input);
  doc["delta"] = cmd.delta;
  doc["replicas"] = cmd.replicas;
  doc["epsilon"] = cmd.epsilon;
  doc["seed"] = cmd.seed;
  json seeds = json::array();
  for (RandomSeed s : report.replica_seeds) seeds.push_back(s.value);
  doc["replica_seeds"] = seeds;
  doc["profile"] = reals_json(report.profile.values);
  doc["significance"] = reals_json(report.significance);
  doc["real_counts"] = counts_json(report.real);
  doc["random_mean"] = reals_json(report.random_mean);
  Sink sink(cmd.out_path, out);
  *sink << doc.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct SimilarityCommand {
  std::vector<std::string> profiles;
  std::string out_path;
};

int run_similarity(const SimilarityCommand& cmd, std::ostream& out) {
  std::vector<std::string> names;
  std::vector<CharacteristicProfile> cps;
  for (const std::string& path : cmd.profiles) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw DataError(path + ": " + e.what());
    }
    if (!doc.contains("profile") || !doc["profile"].is_array() || doc["profile"].size() != kNumMotifs) {
      throw DataError(path + ": expected a 'profile' array of " + std::to_string(kNumMotifs) + " reals");
    }
    CharacteristicProfile cp;
    for (std::size_t i = 0; i < cp.values.size(); ++i) cp.values[i] = doc["profile"][i].get<double>();
    cps.push_back(cp);
    names.push_back(doc.value("dataset", std::filesystem::path(path).stem().string()));
  }
  Sink sink(cmd.out_path, out);
  *sink << "dataset";
  for (const auto& n : names) *sink << ',' << n;
  *sink << '\n';
  for (std::size_t a = 0; a < cps.size(); ++a) {
    *sink << names[a];
    for (std::size_t b = 0; b < cps.size(); ++b) {
      const double r = cp_similarity(cps[a], cps[b]);
      *sink << ',' << (std::isnan(r) ? std::string("nan") : format_real(r));
    }
    *sink << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct FeaturesCommand {
  InputOptions input;
  Timestamp delta = 0;
  std::string set = "thm96";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_features(const FeaturesCommand& cmd, std::ostream& out) {
  const LoadedHypergraph data = load(cmd.input, RandomSeed{cmd.seed});
  const HyperedgeFeatureMatrix features =
      compute_features(data.graph, data.scale.scale_delta(cmd.delta), parse_feature_set(cmd.set));
  Sink sink(cmd.out_path, out);
  *sink << features.to_csv();
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct PredictCommand {
  InputOptions input;
  Timestamp delta = 0;
  std::string sets = "thm96,thm26,shm26";
  std::size_t epochs = 500;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_predict(const PredictCommand& cmd, std::ostream& out) {
  const RandomSeed seed{cmd.seed};
  const LoadedHypergraph data = load(cmd.input, seed);
  std::vector<FeatureSet> sets;
  for (const auto& name : split_list(cmd.sets)) sets.push_back(parse_feature_set(name));
  const auto reports = run_prediction(data.graph, data.scale.scale_delta(cmd.delta), seed, sets,
                                      TrainOptions{cmd.epochs, cmd.learning_rate});
  json doc = json::array();
  for (const PredictionReport& r : reports) {
    doc.push_back({{"feature_set", to_string(r.feature_set)},
                   {"accuracy", r.accuracy},
                   {"train_size", r.train_size},
                   {"test_size", r.test_size},
                   {"seed", r.seed.value}});
  }
  Sink sink(cmd.out_path, out);
  *sink << doc.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct StatsCommand {
  InputOptions input;
  std::string what = "repetition";
  Timestamp delta = 0;
  std::size_t run_length = 2;
  std::string algo = "thyme-plus";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_stats(const StatsCommand& cmd, std::ostream& out) {
  const LoadedHypergraph data = load(cmd.input, RandomSeed{cmd.seed});
  Sink sink(cmd.out_path, out);
  if (cmd.what == "repetition") {
    *sink << "repetition,node_sets\n";
    for (const auto& [rep, n] : repetition_distribution(data.graph)) *sink << rep << ',' << n << '\n';
  } else if (cmd.what == "locality") {
    const auto mean = locality_intervals(data.graph, cmd.run_length);
    // Report in input time units.
    *sink << "run_length,mean_interval\n" << cmd.run_length << ',';
    if (mean) {
      *sink << format_real(*mean / static_cast<double>(data.scale.factor));
    } else {
      *sink << "nan";
    }
    *sink << '\n';
  } else if (cmd.what == "valid-fraction") {
    const auto frac = valid_static_fraction(data.graph, data.scale.scale_delta(cmd.delta));
    *sink << "delta,valid_fraction\n"
          << cmd.delta << ',' << (frac ? format_real(*frac) : std::string("nan")) << '\n';
  } else if (cmd.what == "pair-orders") {
    const auto counts =
        count_motifs(parse_algorithm(cmd.algo), data.graph, data.scale.scale_delta(cmd.delta)).counts;
    *sink << "structure,motif_id,order,count,ratio\n";
    constexpr const char* kOrder[3] = {"O1", "O2", "O3"};
    for (const auto& group : pair_order_stats(counts)) {
      for (std::size_t o = 0; o < 3; ++o) {
        *sink << to_string(group.structure) << ',' << group.motifs[o].value << ',' << kOrder[o] << ','
              << group.counts[o] << ',' << format_real(group.ratios[o]) << '\n';
      }
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct BenchCommand {
  InputOptions input;
  std::size_t synthetic_edges = 0;
  std::string algos = "dp,thyme,thyme-plus";
  std::string deltas;
  bool in_process = false;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct BenchCell {
  double wall_ms = 0.0;
  std::size_t peak_nodes = 0;
  std::size_t peak_edges = 0;
  std::uint64_t total = 0;
  long peak_rss_kb = -1;
};

BenchCell bench_once(Algorithm algorithm, const TemporalHypergraph& graph, Timestamp delta) {
  BenchCell cell;
  const auto start = std::chrono::steady_clock::now();
  const CountResult result = count_motifs(algorithm, graph, delta);
  cell.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  cell.peak_nodes = result.window.peak_nodes;
  cell.peak_edges = result.window.peak_edges;
  cell.total = result.counts.total();
  return cell;
}

// Runs the cell in a child process so that its peak RSS is its own.
BenchCell bench_isolated(Algorithm algorithm, const TemporalHypergraph& graph, Timestamp delta) {
  int fds[2];
  if (pipe(fds) != 0) return bench_once(algorithm, graph, delta);
  std::cout.flush();
  std::cerr.flush();
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    return bench_once(algorithm, graph, delta);
  }
  if (pid == 0) {
    close(fds[0]);
    int status = 0;
    BenchCell cell;
    try {
      cell = bench_once(algorithm, graph, delta);
    } catch (const CountOverflow&) {
      status = kOverflow;
    } catch (...) {
      status = kDataError;
    }
    const ssize_t wrote = write(fds[1], &cell, sizeof(cell));
    close(fds[1]);
    _exit(wrote == static_cast<ssize_t>(sizeof(cell)) ? status : kDataError);
  }
  close(fds[1]);
  BenchCell cell;
  const ssize_t got = read(fds[0], &cell, sizeof(cell));
  close(fds[0]);
  int status = 0;
  struct rusage usage {};
  wait4(pid, &status, 0, &usage);
  if (got != static_cast<ssize_t>(sizeof(cell)) || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    if (WIFEXITED(status) && WEXITSTATUS(status) == kOverflow) throw CountOverflow("count overflow in bench cell");
    throw DataError("bench cell for " + std::string(to_string(algorithm)) + " failed");
  }
  cell.peak_rss_kb = usage.ru_maxrss;
  return cell;
}

int run_bench(const BenchCommand& cmd, std::ostream& out) {
  const RandomSeed seed{cmd.seed};
  LoadedHypergraph data;
  std::string name;
  if (cmd.synthetic_edges > 0) {
    LocalRepetitionConfig config;
    config.edge_count = cmd.synthetic_edges;
    data.graph = local_repetition_hypergraph(config, seed);
    name = "synthetic-local-repetition";
  } else {
    if (cmd.input.path.empty()) throw CLI::ValidationError("--input", "required unless --synthetic is given");
    data = load(cmd.input, seed);
    name = dataset_name(cmd.input);
  }
  std::vector<Algorithm> algorithms;
  for (const auto& a : split_list(cmd.algos)) algorithms.push_back(parse_algorithm(a));
  std::vector<Timestamp> deltas;
  for (const auto& d : split_list(cmd.deltas)) deltas.push_back(parse_delta(d));
  if (deltas.empty()) throw CLI::ValidationError("--deltas", "at least one delta is required");

  Sink sink(cmd.out_path, out);
  *sink << "dataset,algorithm,delta,wall_ms,peak_rss_kb,peak_projected_nodes,peak_projected_edges,total_instances\n";
  for (Timestamp delta : deltas) {
    for (Algorithm a : algorithms) {
      const Timestamp internal = data.scale.scale_delta(delta);
      const BenchCell cell = cmd.in_process ? bench_once(a, data.graph, internal)
                                            : bench_isolated(a, data.graph, internal);
      *sink << name << ',' << to_string(a) << ',' << delta << ',' << std::fixed << std::setprecision(3)
            << cell.wall_ms << std::defaultfloat << ',' << cell.peak_rss_kb << ',' << cell.peak_nodes
            << ',' << cell.peak_edges << ',' << cell.total << '\n';
      (*sink).flush();
    }
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and analysis of temporal hypergraph motifs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::uint64_t default_seed = seed_from_env(RandomSeed{1}).value;

  CountCommand count{};
  count.seed = default_seed;
  auto* count_cmd = app.add_subcommand("count", "Count instances of the 96 temporal motifs");
  add_input_options(count_cmd, count.input);
  count_cmd->add_option("--algo", count.algo, "bruteforce | dp | thyme | thyme-plus")
      ->check(CLI::IsMember({"bruteforce", "dp", "thyme", "thyme-plus"}));
  count_cmd->add_option("-d,--delta", count.delta, "Time window in input units")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("-o,--out", count.out_path, "Output file (default stdout)");
  count_cmd->add_flag("--json", count.as_json, "Emit JSON with run metadata instead of CSV");
  count_cmd->add_option("--seed", count.seed, "Tie-break seed");

  std::string table_out;
  auto* table_cmd = app.add_subcommand("motif-table", "Export the motif catalog as CSV");
  table_cmd->add_option("-o,--out", table_out, "Output file (default stdout)");

  RandomizeCommand randomize{};
  randomize.seed = default_seed;
  auto* randomize_cmd = app.add_subcommand("randomize", "Generate a randomized hypergraph (TSV)");
  add_input_options(randomize_cmd, randomize.input);
  randomize_cmd->add_option("--mode", randomize.mode, "shuffle | hypercl")
      ->check(CLI::IsMember({"shuffle", "hypercl"}));
  randomize_cmd->add_option("--seed", randomize.seed, "Random seed");
  randomize_cmd->add_option("-o,--out", randomize.out_path, "Output file (default stdout)");

  ProfileCommand profile{};
  profile.seed = default_seed;
  auto* profile_cmd = app.add_subcommand("profile", "Characteristic profile against randomized replicas");
  add_input_options(profile_cmd, profile.input);
  profile_cmd->add_option("-d,--delta", profile.delta, "Time window")->required()->check(CLI::NonNegativeNumber);
  profile_cmd->add_option("--replicas", profile.replicas, "Randomized replicas")->check(CLI::PositiveNumber);
  profile_cmd->add_option("--epsilon", profile.epsilon, "Significance smoothing")->check(CLI::PositiveNumber);
  profile_cmd->add_option("--algo", profile.algo, "Counting algorithm")
      ->check(CLI::IsMember({"bruteforce", "dp", "thyme", "thyme-plus"}));
  profile_cmd->add_option("--seed", profile.seed, "Random seed");
  profile_cmd->add_option("-o,--out", profile.out_path, "Output file (default stdout)");

  SimilarityCommand similarity{};
  auto* similarity_cmd = app.add_subcommand("similarity", "Pearson matrix between profiles");
  similarity_cmd->add_option("profiles", similarity.profiles, "Profile JSON files")->required()->check(CLI::ExistingFile);
  similarity_cmd->add_option("-o,--out", similarity.out_path, "Output file (default stdout)");

  FeaturesCommand features{};
  features.seed = default_seed;
  auto* features_cmd = app.add_subcommand("features", "Per-hyperedge motif features (CSV)");
  add_input_options(features_cmd, features.input);
  features_cmd->add_option("-d,--delta", features.delta, "Time window")->required()->check(CLI::NonNegativeNumber);
  features_cmd->add_option("--set", features.set, "thm96 | thm26 | shm26")
      ->check(CLI::IsMember({"thm96", "thm26", "shm26"}));
  features_cmd->add_option("--seed", features.seed, "Tie-break seed");
  features_cmd->add_option("-o,--out", features.out_path, "Output file (default stdout)");

  PredictCommand predict{};
  predict.seed = default_seed;
  auto* predict_cmd = app.add_subcommand("predict", "Hyperedge prediction with motif features");
  add_input_options(predict_cmd, predict.input);
  predict_cmd->add_option("-d,--delta", predict.delta, "Time window")->required()->check(CLI::NonNegativeNumber);
  predict_cmd->add_option("--sets", predict.sets, "Comma-separated feature sets");
  predict_cmd->add_option("--epochs", predict.epochs, "Gradient steps")->check(CLI::PositiveNumber);
  predict_cmd->add_option("--lr", predict.learning_rate, "Learning rate")->check(CLI::PositiveNumber);
  predict_cmd->add_option("--seed", predict.seed, "Random seed");
  predict_cmd->add_option("-o,--out", predict.out_path, "Output file (default stdout)");

  StatsCommand stats{};
  stats.seed = default_seed;
  auto* stats_cmd = app.add_subcommand("stats", "Repetition, locality, valid-fraction and pair-order statistics");
  add_input_options(stats_cmd, stats.input);
  stats_cmd->add_option("--what", stats.what, "repetition | locality | valid-fraction | pair-orders")
      ->check(CLI::IsMember({"repetition", "locality", "valid-fraction", "pair-orders"}));
  stats_cmd->add_option("-d,--delta", stats.delta, "Time window")->check(CLI::NonNegativeNumber);
  stats_cmd->add_option("-n,--run-length", stats.run_length, "Consecutive duplicates per locality run")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  stats_cmd->add_option("--algo", stats.algo, "Counting algorithm for pair-orders")
      ->check(CLI::IsMember({"bruteforce", "dp", "thyme", "thyme-plus"}));
  stats_cmd->add_option("--seed", stats.seed, "Tie-break seed");
  stats_cmd->add_option("-o,--out", stats.out_path, "Output file (default stdout)");

  BenchCommand bench{};
  bench.seed = default_seed;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime and memory per algorithm and delta (CSV)");
  bench_cmd->add_option("-i,--input", bench.input.path, "Input hypergraph");
  bench_cmd->add_option("--format", bench.input.format, "Input format")->check(CLI::IsMember({"tsv", "trio"}));
  bench_cmd->add_option("--dataset", bench.input.dataset, "Dataset name recorded in outputs");
  bench_cmd->add_option("--synthetic", bench.synthetic_edges, "Use a synthetic local-repetition corpus of N edges");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");
  bench_cmd->add_option("--deltas", bench.deltas, "Comma-separated deltas")->required();
  bench_cmd->add_flag("--in-process", bench.in_process, "Skip per-cell child processes (no RSS column)");
  bench_cmd->add_option("--seed", bench.seed, "Seed for tie-breaks and synthetic data");
  bench_cmd->add_option("-o,--out", bench.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*count_cmd) return run_count(count, out);
    if (*table_cmd) {
      Sink sink(table_out, out);
      *sink << motif_table().to_csv();
      return kSuccess;
    }
    if (*randomize_cmd) return run_randomize(randomize, out);
    if (*profile_cmd) return run_profile(profile, out);
    if (*similarity_cmd) return run_similarity(similarity, out);
    if (*features_cmd) return run_features(features, out);
    if (*predict_cmd) return run_predict(predict, out);
    if (*stats_cmd) return run_stats(stats, out);
    if (*bench_cmd) return run_bench(bench, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CountOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace thyme::cli
