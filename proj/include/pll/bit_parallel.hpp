#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pll/graph.hpp"
#include "pll/ordering.hpp"
#include "pll/types.hpp"

namespace pll {

inline constexpr std::uint32_t kMaxBitParallelWidth = 64;
using NeighborMask = std::uint64_t;

/// One bit-parallel label entry: distance to the root r plus the subsets of
/// S_r lying one closer (mask_m1) or equally far (mask_0).
struct BitParallelEntry {
  Rank root_rank = 0;
  HopDistance dist = kInf8;
  NeighborMask mask_m1 = 0;
  NeighborMask mask_0 = 0;

  bool operator==(const BitParallelEntry&) const = default;
};

/// Distance between s and t through one of {r} ∪ S_r, given their entries for
/// the same root. Throws std::invalid_argument if the roots differ.
Distance bp_query(const BitParallelEntry& s, const BitParallelEntry& t);

namespace detail {
inline Distance bp_query_unchecked(const BitParallelEntry& s, const BitParallelEntry& t) {
  Distance d = Distance{s.dist} + Distance{t.dist};
  if (s.mask_m1 & t.mask_m1) return d - 2;
  if ((s.mask_0 & t.mask_m1) | (s.mask_m1 & t.mask_0)) return d - 1;
  return d;
}
}  // namespace detail

/// Per-vertex bit-parallel labels, sorted by root rank. Only vertices reached
/// from a root carry an entry for it.
class BitParallelLabels {
 public:
  BitParallelLabels() = default;

  static BitParallelLabels from_arrays(std::vector<std::size_t> offsets,
                                       std::vector<BitParallelEntry> entries);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return entries_.empty(); }
  std::span<const BitParallelEntry> operator[](VertexId v) const {
    return std::span(entries_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::size_t total_entries() const { return entries_.size(); }
  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const BitParallelEntry> entries() const { return entries_; }

  bool operator==(const BitParallelLabels&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<BitParallelEntry> entries_;
};

/// Minimum of bp_query over roots shared by the two labels.
inline Distance bp_query(std::span<const BitParallelEntry> s, std::span<const BitParallelEntry> t) {
  Distance best = kInfinity;
  std::size_t i = 0, j = 0;
  while (i < s.size() && j < t.size()) {
    if (s[i].root_rank == t[j].root_rank) {
      best = std::min(best, detail::bp_query_unchecked(s[i], t[j]));
      ++i;
      ++j;
    } else if (s[i].root_rank < t[j].root_rank) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

struct BpBfsResult {
  std::vector<HopDistance> dist;  // kInf8 when unreachable
  std::vector<NeighborMask> mask_m1;
  std::vector<NeighborMask> mask_0;
};

/// Simultaneous BFS from `root` and up to 64 of its neighbors. Bit j of the
/// masks refers to neighbor_set[j]. Throws std::invalid_argument if a member
/// is not a neighbor of the root, is repeated, or the set exceeds 64, and
/// OverflowError for distances that do not fit in 8 bits.
BpBfsResult bp_bfs(const Graph& g, VertexId root, std::span<const VertexId> neighbor_set);

struct BpRoot {
  VertexId root = 0;
  std::vector<VertexId> neighbor_set;

  bool operator==(const BpRoot&) const = default;
};

/// Greedy root selection: up to `count` times, take the best-ranked unused
/// vertex as root and up to `width` of its best-ranked unused neighbors as S_r.
std::vector<BpRoot> select_bp_roots(const Graph& g, const VertexOrder& order, std::size_t count,
                                    std::uint32_t width = kMaxBitParallelWidth);

}  // namespace pll
