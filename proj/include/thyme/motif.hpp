#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thyme/hypergraph.hpp"

namespace thyme {

inline constexpr int kNumMotifs = 96;
inline constexpr int kNumStaticMotifs = 26;
inline constexpr int kNumRegions = 7;

/// Emptiness of the seven Venn regions of an ordered hyperedge triple
/// (ei, ej, ek). Bit r-1 is set iff region r is non-empty:
///   1: ei only   2: ej only   3: ek only
///   4: ei∩ej∖ek  5: ej∩ek∖ei  6: ek∩ei∖ej   7: ei∩ej∩ek
struct RegionPattern {
  std::uint8_t bits = 0;

  constexpr RegionPattern() = default;
  constexpr explicit RegionPattern(unsigned code) : bits(static_cast<std::uint8_t>(code & 0x7f)) {}

  constexpr bool region(int r) const noexcept { return (bits >> (r - 1)) & 1u; }
  constexpr unsigned code() const noexcept { return bits; }

  // Duplication facts readable from the pattern alone.
  constexpr bool first_equals_second() const noexcept { return (bits & 0b0110011) == 0; }
  constexpr bool second_equals_third() const noexcept { return (bits & 0b0101110) == 0; }
  constexpr bool first_equals_third() const noexcept { return (bits & 0b0011101) == 0; }

  // "0101100"-style string, region 1 first.
  std::string region_string() const;

  friend constexpr bool operator==(RegionPattern, RegionPattern) = default;
  friend constexpr auto operator<=>(RegionPattern, RegionPattern) = default;
};

struct MotifId {
  int value = 0;  // 1..96
  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(value - 1); }
  friend constexpr bool operator==(MotifId, MotifId) = default;
  friend constexpr auto operator<=>(MotifId, MotifId) = default;
};

struct StaticMotifId {
  int value = 0;  // 1..26
  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(value - 1); }
  friend constexpr bool operator==(StaticMotifId, StaticMotifId) = default;
  friend constexpr auto operator<=>(StaticMotifId, StaticMotifId) = default;
};

enum class DuplicationClass { triple, pair_o1, pair_o2, pair_o3, single };
enum class PairStructure { none, dup_contains_other, other_contains_dup, proper_overlap };

std::string_view to_string(DuplicationClass c) noexcept;
std::string_view to_string(PairStructure s) noexcept;

// Pattern from the seven set cardinalities (inclusion-exclusion).
RegionPattern pattern_from_cardinalities(std::size_t a, std::size_t b, std::size_t c,
                                         std::size_t ab, std::size_t bc, std::size_t ca,
                                         std::size_t abc);

// Throws std::invalid_argument if any set is empty.
RegionPattern region_pattern(NodeSpan ei, NodeSpan ej, NodeSpan ek);

// True iff the pairwise-overlap graph of the three hyperedges is connected.
constexpr bool is_connected_pattern(RegionPattern p) noexcept {
  const bool ij = p.region(4) || p.region(7);
  const bool jk = p.region(5) || p.region(7);
  const bool ki = p.region(6) || p.region(7);
  return (int{ij} + int{jk} + int{ki}) >= 2;
}

DuplicationClass duplication_class(RegionPattern p) noexcept;

// Pattern of the reordered triple (e[order[0]], e[order[1]], e[order[2]]).
RegionPattern permute_pattern(RegionPattern p, const std::array<int, 3>& order) noexcept;

// Minimum code over the six argument orders.
RegionPattern canonical_pattern(RegionPattern p) noexcept;

struct MotifEntry {
  RegionPattern pattern;
  MotifId id;
  DuplicationClass duplication;
  PairStructure structure;
  std::optional<StaticMotifId> static_class;  // triple-inducing only
};

/// Catalog of the 96 connected temporal patterns and the 26 static classes.
///
/// IDs 1..86 are triple-inducing patterns in ascending code order. IDs
/// 87..95 are pair-inducing, grouped by pair structure (ordered by the code
/// of each structure's O1 pattern) and O1, O2, O3 within a group. ID 96 is
/// the all-duplicated pattern.
class MotifTable {
 public:
  const std::vector<MotifEntry>& entries() const noexcept { return entries_; }
  const MotifEntry& entry(MotifId id) const { return entries_[id.index()]; }

  std::optional<MotifId> id_of(RegionPattern p) const noexcept {
    const int v = id_of_code_[p.code()];
    if (v == 0) return std::nullopt;
    return MotifId{v};
  }
  // Static class of a triple-inducing connected pattern.
  std::optional<StaticMotifId> static_class_of(RegionPattern p) const noexcept {
    const int v = static_of_code_[p.code()];
    if (v == 0) return std::nullopt;
    return StaticMotifId{v};
  }
  // Canonical (orbit-minimum) code of each static class, ascending.
  const std::vector<RegionPattern>& static_representatives() const noexcept {
    return static_reps_;
  }

  std::string to_csv() const;

 private:
  friend MotifTable build_motif_table();

  std::vector<MotifEntry> entries_;
  std::array<int, 128> id_of_code_{};
  std::array<int, 128> static_of_code_{};
  std::vector<RegionPattern> static_reps_;
};

MotifTable build_motif_table();

// Process-wide table, built on first use.
const MotifTable& motif_table();

// h(ei, ej, ek) for arrival-ordered sets; nullopt when disconnected.
std::optional<MotifId> classify_temporal(NodeSpan ei, NodeSpan ej, NodeSpan ek);

// Static h-motif class of three distinct node sets; nullopt when
// disconnected. Throws std::invalid_argument if two sets are equal.
std::optional<StaticMotifId> classify_static(NodeSpan ea, NodeSpan eb, NodeSpan ec);

}  // namespace thyme
