#include "thyme/motif.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "thyme/node_set_hash.hpp"
#include "thyme/simd.hpp"

namespace thyme {
namespace {

// Regions owned by exactly one argument (indexed by argument position) and by
// a pair of arguments.
constexpr int kSingleRegion[3] = {1, 2, 3};

constexpr int pair_region(int x, int y) {
  const int lo = std::min(x, y);
  const int hi = std::max(x, y);
  if (lo == 0 && hi == 1) return 4;
  if (lo == 1 && hi == 2) return 5;
  return 6;  // {0, 2}
}

constexpr std::array<std::array<int, 3>, 6> kOrders{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

std::size_t triple_intersection_size(NodeSpan a, NodeSpan b, NodeSpan c) {
  std::size_t i = 0, j = 0, k = 0, count = 0;
  while (i < a.size() && j < b.size() && k < c.size()) {
    const NodeId m = std::max({a[i], b[j], c[k]});
    if (a[i] < m) {
      ++i;
    } else if (b[j] < m) {
      ++j;
    } else if (c[k] < m) {
      ++k;
    } else {
      ++count;
      ++i;
      ++j;
      ++k;
    }
  }
  return count;
}

PairStructure pair_structure(RegionPattern p, DuplicationClass dup) {
  // Rotate so the duplicated hyperedge comes first and second.
  std::array<int, 3> order{};
  switch (dup) {
    case DuplicationClass::pair_o1:
      order = {0, 1, 2};
      break;
    case DuplicationClass::pair_o2:
      order = {1, 2, 0};
      break;
    case DuplicationClass::pair_o3:
      order = {0, 2, 1};
      break;
    default:
      return PairStructure::none;
  }
  const RegionPattern q = permute_pattern(p, order);
  const bool other_only = q.region(3);
  const bool dup_only = q.region(4);
  if (other_only && dup_only) return PairStructure::proper_overlap;
  if (other_only) return PairStructure::other_contains_dup;
  return PairStructure::dup_contains_other;
}

}  // namespace

std::string RegionPattern::region_string() const {
  std::string s(kNumRegions, '0');
  for (int r = 1; r <= kNumRegions; ++r) {
    if (region(r)) s[static_cast<std::size_t>(r - 1)] = '1';
  }
  return s;
}

std::string_view to_string(DuplicationClass c) noexcept {
  switch (c) {
    case DuplicationClass::triple:
      return "triple";
    case DuplicationClass::pair_o1:
      return "pair-O1";
    case DuplicationClass::pair_o2:
      return "pair-O2";
    case DuplicationClass::pair_o3:
      return "pair-O3";
    case DuplicationClass::single:
      return "single";
  }
  return "?";
}

std::string_view to_string(PairStructure s) noexcept {
  switch (s) {
    case PairStructure::none:
      return "n/a";
    case PairStructure::dup_contains_other:
      return "dup-contains-other";
    case PairStructure::other_contains_dup:
      return "other-contains-dup";
    case PairStructure::proper_overlap:
      return "proper-overlap";
  }
  return "?";
}

RegionPattern pattern_from_cardinalities(std::size_t a, std::size_t b, std::size_t c,
                                         std::size_t ab, std::size_t bc, std::size_t ca,
                                         std::size_t abc) {
  // Region sizes; signed because the intermediate sums can dip below zero.
  const auto sa = static_cast<std::int64_t>(a), sb = static_cast<std::int64_t>(b),
             sc = static_cast<std::int64_t>(c);
  const auto sab = static_cast<std::int64_t>(ab), sbc = static_cast<std::int64_t>(bc),
             sca = static_cast<std::int64_t>(ca), sabc = static_cast<std::int64_t>(abc);
  const std::int64_t sizes[kNumRegions] = {
      sa - sab - sca + sabc, sb - sab - sbc + sabc, sc - sbc - sca + sabc,
      sab - sabc,            sbc - sabc,            sca - sabc,
      sabc,
  };
  unsigned bits = 0;
  for (int r = 0; r < kNumRegions; ++r) {
    if (sizes[r] > 0) bits |= 1u << r;
  }
  return RegionPattern(bits);
}

RegionPattern region_pattern(NodeSpan ei, NodeSpan ej, NodeSpan ek) {
  if (ei.empty() || ej.empty() || ek.empty()) {
    throw std::invalid_argument("region_pattern: hyperedges must be non-empty");
  }
  const std::size_t ij = simd::intersection_size(ei, ej);
  const std::size_t jk = simd::intersection_size(ej, ek);
  const std::size_t ki = simd::intersection_size(ek, ei);
  const std::size_t ijk = (ij == 0 || jk == 0 || ki == 0) ? 0 : triple_intersection_size(ei, ej, ek);
  return pattern_from_cardinalities(ei.size(), ej.size(), ek.size(), ij, jk, ki, ijk);
}

DuplicationClass duplication_class(RegionPattern p) noexcept {
  const bool ij = p.first_equals_second();
  const bool jk = p.second_equals_third();
  const bool ik = p.first_equals_third();
  if (ij && jk) return DuplicationClass::single;
  if (ij) return DuplicationClass::pair_o1;
  if (jk) return DuplicationClass::pair_o2;
  if (ik) return DuplicationClass::pair_o3;
  return DuplicationClass::triple;
}

RegionPattern permute_pattern(RegionPattern p, const std::array<int, 3>& order) noexcept {
  unsigned bits = 0;
  for (int pos = 0; pos < 3; ++pos) {
    if (p.region(kSingleRegion[order[pos]])) bits |= 1u << (kSingleRegion[pos] - 1);
  }
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      if (p.region(pair_region(order[x], order[y]))) bits |= 1u << (pair_region(x, y) - 1);
    }
  }
  if (p.region(7)) bits |= 1u << 6;
  return RegionPattern(bits);
}

RegionPattern canonical_pattern(RegionPattern p) noexcept {
  RegionPattern best = p;
  for (const auto& order : kOrders) best = std::min(best, permute_pattern(p, order));
  return best;
}

MotifTable build_motif_table() {
  MotifTable table;
  std::vector<RegionPattern> triples;
  std::vector<RegionPattern> pairs;
  std::vector<RegionPattern> singles;
  for (unsigned code = 0; code < 128; ++code) {
    const RegionPattern p(code);
    if (!is_connected_pattern(p)) continue;
    switch (duplication_class(p)) {
      case DuplicationClass::triple:
        triples.push_back(p);
        break;
      case DuplicationClass::single:
        singles.push_back(p);
        break;
      default:
        pairs.push_back(p);
        break;
    }
  }

  // Static classes: orbit representatives in ascending order.
  std::map<RegionPattern, int> class_of_rep;
  for (RegionPattern p : triples) class_of_rep.emplace(canonical_pattern(p), 0);
  int next_class = 1;
  for (auto& [rep, cls] : class_of_rep) {
    cls = next_class++;
    table.static_reps_.push_back(rep);
  }

  int next_id = 1;
  auto add = [&](RegionPattern p, DuplicationClass dup, PairStructure structure) {
    MotifEntry entry{p, MotifId{next_id}, dup, structure, std::nullopt};
    if (dup == DuplicationClass::triple) {
      const int cls = class_of_rep.at(canonical_pattern(p));
      entry.static_class = StaticMotifId{cls};
      table.static_of_code_[p.code()] = cls;
    }
    table.id_of_code_[p.code()] = next_id;
    table.entries_.push_back(entry);
    ++next_id;
  };

  for (RegionPattern p : triples) add(p, DuplicationClass::triple, PairStructure::none);

  // Pair patterns: one group per structure, groups ordered by their O1 code.
  std::map<PairStructure, std::array<std::optional<RegionPattern>, 3>> groups;
  for (RegionPattern p : pairs) {
    const DuplicationClass dup = duplication_class(p);
    const int slot = dup == DuplicationClass::pair_o1 ? 0 : dup == DuplicationClass::pair_o2 ? 1 : 2;
    groups[pair_structure(p, dup)][static_cast<std::size_t>(slot)] = p;
  }
  std::vector<std::pair<PairStructure, std::array<std::optional<RegionPattern>, 3>>> ordered(
      groups.begin(), groups.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return *a.second[0] < *b.second[0]; });
  constexpr DuplicationClass kSlots[3] = {DuplicationClass::pair_o1, DuplicationClass::pair_o2,
                                          DuplicationClass::pair_o3};
  for (const auto& [structure, slots] : ordered) {
    for (std::size_t s = 0; s < 3; ++s) add(*slots[s], kSlots[s], structure);
  }

  for (RegionPattern p : singles) add(p, DuplicationClass::single, PairStructure::none);
  return table;
}

const MotifTable& motif_table() {
  static const MotifTable table = build_motif_table();
  return table;
}

std::string MotifTable::to_csv() const {
  std::ostringstream out;
  out << "motif_id,pattern_code,region_bits,duplication_class,pair_structure,static_class\n";
  for (const MotifEntry& e : entries_) {
    out << e.id.value << ',' << e.pattern.code() << ',' << e.pattern.region_string() << ','
        << to_string(e.duplication) << ',' << to_string(e.structure) << ',';
    if (e.static_class) out << e.static_class->value;
    out << '\n';
  }
  return out.str();
}

std::optional<MotifId> classify_temporal(NodeSpan ei, NodeSpan ej, NodeSpan ek) {
  return motif_table().id_of(region_pattern(ei, ej, ek));
}

std::optional<StaticMotifId> classify_static(NodeSpan ea, NodeSpan eb, NodeSpan ec) {
  const NodeSpanEqual eq;
  if (eq(ea, eb) || eq(eb, ec) || eq(ea, ec)) {
    throw std::invalid_argument("classify_static: static hyperedges must be distinct");
  }
  const RegionPattern p = region_pattern(ea, eb, ec);
  if (!is_connected_pattern(p)) return std::nullopt;
  return motif_table().static_class_of(p);
}

}  // namespace thyme
