#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "thyme/hypergraph.hpp"
#include "thyme/randomization.hpp"

namespace thyme {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }  // 0 when not line-specific

 private:
  std::string source_;
  std::size_t line_;
};

/// Map from original time units to the tie-broken internal clock.
///
/// Internal time = original * factor + within-group offset, offsets in
/// [0, group_size). A window of delta original units becomes
/// delta * factor + slack internal units, which admits exactly the same
/// triples as before (tied edges count as span zero).
struct TimeScale {
  Timestamp factor = 1;
  Timestamp slack = 0;

  Timestamp scale_delta(Timestamp delta) const;
  bool identity() const noexcept { return factor == 1 && slack == 0; }
};

struct TieBreakResult {
  std::vector<TemporalHyperedge> edges;  // strictly increasing timestamps
  std::vector<std::size_t> source;       // input index of each output edge
  TimeScale scale;
};

// Input sorted by timestamp (ties allowed). Edges sharing a timestamp are
// shuffled with `seed`; timestamps are then rescaled to be unique.
TieBreakResult break_ties(std::vector<TemporalHyperedge> edges, RandomSeed seed);

struct LoadedHypergraph {
  TemporalHypergraph graph;
  TimeScale scale;
  std::vector<std::string> node_labels;  // dense id -> original label
};

// "timestamp<TAB>id,id,..." per line; '#' starts a comment line.
LoadedHypergraph parse_tsv(const std::filesystem::path& path, RandomSeed seed);
LoadedHypergraph parse_tsv(std::istream& in, RandomSeed seed, const std::string& source = "<stream>");

// <prefix>-nverts.txt, <prefix>-simplices.txt, <prefix>-times.txt
LoadedHypergraph parse_trio(const std::string& prefix, RandomSeed seed);

void write_tsv(std::ostream& out, const TemporalHypergraph& graph);
void write_tsv(const std::filesystem::path& path, const TemporalHypergraph& graph);

enum class InputFormat { tsv, trio };
InputFormat parse_format(const std::string& name);

LoadedHypergraph load_hypergraph(const std::string& input, InputFormat format, RandomSeed seed);

}  // namespace thyme
