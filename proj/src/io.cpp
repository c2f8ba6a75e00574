#include "thyme/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace thyme {
namespace {

template <class Int>
bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

// Assigns dense ids in first-appearance order.
class NodeInterner {
 public:
  NodeId intern(std::uint64_t label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(std::to_string(label));
    return it->second;
  }
  std::size_t size() const noexcept { return labels_.size(); }
  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::unordered_map<std::uint64_t, NodeId> ids_;
  std::vector<std::string> labels_;
};

LoadedHypergraph finish(std::vector<TemporalHyperedge> edges, NodeInterner& interner,
                        RandomSeed seed) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const TemporalHyperedge& a, const TemporalHyperedge& b) { return a.time < b.time; });
  TieBreakResult tied = break_ties(std::move(edges), seed);
  LoadedHypergraph out;
  out.scale = tied.scale;
  out.graph = TemporalHypergraph(interner.size(), std::move(tied.edges));
  out.node_labels = interner.take_labels();
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// One integer per non-blank line.
template <class Int>
std::vector<Int> read_integer_column(const std::filesystem::path& path) {
  std::vector<Int> values;
  std::size_t line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    Int v{};
    if (!parse_integer(line, v)) {
      throw ParseError(path.string(), line_no, "expected an integer, got '" + std::string(line) + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(source),
      line_(line) {}

Timestamp TimeScale::scale_delta(Timestamp delta) const {
  Timestamp scaled;
  if (__builtin_mul_overflow(delta, factor, &scaled) || __builtin_add_overflow(scaled, slack, &scaled)) {
    throw std::overflow_error("scaled delta does not fit in 64 bits");
  }
  return scaled;
}

TieBreakResult break_ties(std::vector<TemporalHyperedge> edges, RandomSeed seed) {
  TieBreakResult out;
  const std::size_t n = edges.size();
  out.source.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.source[i] = i;

  std::size_t max_group = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && edges[j].time == edges[i].time) ++j;
    if (i > 0 && edges[i - 1].time > edges[i].time) {
      throw std::invalid_argument("break_ties: input is not sorted by timestamp");
    }
    max_group = std::max(max_group, j - i);
    i = j;
  }

  if (max_group == 1) {
    out.edges = std::move(edges);
    return out;
  }

  // Offsets stay below the group size g; scaling by 2g - 1 keeps every
  // cross-group gap of d units inside [d*S - (g-1), d*S + (g-1)], so the
  // windows [0, delta*S + g - 1] and [0, delta] select the same pairs.
  const auto g = static_cast<Timestamp>(max_group);
  const Timestamp factor = 2 * g - 1;
  out.scale = TimeScale{factor, g - 1};

  Rng rng(seed.value);
  std::vector<TemporalHyperedge> result;
  result.reserve(n);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && edges[j].time == edges[i].time) ++j;
    order.resize(j - i);
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = i + k;
    if (order.size() > 1) std::shuffle(order.begin(), order.end(), rng);
    Timestamp base;
    if (__builtin_mul_overflow(edges[i].time, factor, &base)) {
      throw std::overflow_error("tie-broken timestamp does not fit in 64 bits");
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      out.source[result.size()] = order[k];
      result.push_back({std::move(edges[order[k]].nodes), base + static_cast<Timestamp>(k)});
    }
    i = j;
  }
  out.edges = std::move(result);
  return out;
}

LoadedHypergraph parse_tsv(std::istream& in, RandomSeed seed, const std::string& source) {
  NodeInterner interner;
  std::vector<TemporalHyperedge> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(source, line_no, "missing tab separator");
    TemporalHyperedge edge;
    if (!parse_integer(trim(line.substr(0, tab)), edge.time)) {
      throw ParseError(source, line_no, "timestamp is not a 64-bit integer");
    }
    std::string_view rest = line.substr(tab + 1);
    if (trim(rest).empty()) throw ParseError(source, line_no, "empty node list");
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view token = trim(rest.substr(0, comma));
      std::uint64_t label = 0;
      if (!parse_integer(token, label)) {
        throw ParseError(source, line_no, "bad node id '" + std::string(token) + "'");
      }
      edge.nodes.push_back(interner.intern(label));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    normalize_node_set(edge.nodes);
    edges.push_back(std::move(edge));
  }
  return finish(std::move(edges), interner, seed);
}

LoadedHypergraph parse_tsv(const std::filesystem::path& path, RandomSeed seed) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_tsv(in, seed, path.string());
}

LoadedHypergraph parse_trio(const std::string& prefix, RandomSeed seed) {
  const std::filesystem::path nverts_path = prefix + "-nverts.txt";
  const std::filesystem::path simplices_path = prefix + "-simplices.txt";
  const std::filesystem::path times_path = prefix + "-times.txt";
  const auto nverts = read_integer_column<std::uint64_t>(nverts_path);
  const auto simplices = read_integer_column<std::uint64_t>(simplices_path);
  const auto times = read_integer_column<Timestamp>(times_path);

  if (times.size() != nverts.size()) {
    throw ParseError(times_path.string(), 0,
                     "has " + std::to_string(times.size()) + " entries but " +
                         nverts_path.filename().string() + " has " + std::to_string(nverts.size()));
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < nverts.size(); ++i) {
    if (nverts[i] == 0) throw ParseError(nverts_path.string(), i + 1, "empty hyperedge");
    total += nverts[i];
  }
  if (total != simplices.size()) {
    throw ParseError(simplices_path.string(), 0,
                     "has " + std::to_string(simplices.size()) + " entries but the vertex counts sum to " +
                         std::to_string(total));
  }

  NodeInterner interner;
  std::vector<TemporalHyperedge> edges;
  edges.reserve(nverts.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < nverts.size(); ++i) {
    TemporalHyperedge edge;
    edge.time = times[i];
    for (std::uint64_t k = 0; k < nverts[i]; ++k) edge.nodes.push_back(interner.intern(simplices[pos++]));
    normalize_node_set(edge.nodes);
    edges.push_back(std::move(edge));
  }
  return finish(std::move(edges), interner, seed);
}

void write_tsv(std::ostream& out, const TemporalHypergraph& graph) {
  for (const auto& e : graph.edges()) {
    out << e.time << '\t';
    for (std::size_t k = 0; k < e.nodes.size(); ++k) {
      if (k > 0) out << ',';
      out << e.nodes[k];
    }
    out << '\n';
  }
}

void write_tsv(const std::filesystem::path& path, const TemporalHypergraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_tsv(out, graph);
}

InputFormat parse_format(const std::string& name) {
  if (name == "tsv") return InputFormat::tsv;
  if (name == "trio") return InputFormat::trio;
  throw std::invalid_argument("unknown input format '" + name + "'");
}

LoadedHypergraph load_hypergraph(const std::string& input, InputFormat format, RandomSeed seed) {
  return format == InputFormat::tsv ? parse_tsv(std::filesystem::path(input), seed)
                                    : parse_trio(input, seed);
}

}  // namespace thyme
