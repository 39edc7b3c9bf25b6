#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pll/types.hpp"

namespace pll {

inline constexpr VertexId kNoParent = std::numeric_limits<VertexId>::max();

/// Read-only view of one vertex label, sentinel included.
template <typename D>
struct LabelView {
  std::span<const Rank> ranks;
  std::span<const D> dists;
  std::span<const VertexId> parents;  // empty unless paths were recorded

  // Entries without the trailing sentinel.
  std::size_t size() const { return ranks.size() - 1; }
};

/// Result of a merge-join: the distance and the positions of the witnessing
/// hub in each label (meaningless when the distance is infinite).
struct HubMatch {
  Distance distance = kInfinity;
  std::size_t pos_a = 0;
  std::size_t pos_b = 0;
};

/// Minimum of dist_a + dist_b over ranks common to both labels. Both labels
/// end in the (n, inf) sentinel, so the scan needs no end-of-array checks.
template <typename D>
inline HubMatch merge_join(const LabelView<D>& a, const LabelView<D>& b) {
  HubMatch best;
  const Rank* ra = a.ranks.data();
  const Rank* rb = b.ranks.data();
  std::size_t i = 0, j = 0;
  for (;;) {
    const Rank x = ra[i];
    const Rank y = rb[j];
    if (x == y) {
      if (a.dists[i] == kInfOf<D>) break;
      const Distance d = Distance{a.dists[i]} + Distance{b.dists[j]};
      if (d < best.distance) best = {d, i, j};
      ++i;
      ++j;
    } else if (x < y) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

/// Per-vertex labels stored as contiguous parallel arrays. Vertex v owns the
/// half-open slot range [offsets[v], offsets[v+1]); its last slot is the
/// sentinel (rank n, distance inf).
template <typename D>
class LabelSet {
 public:
  using distance_type = D;

  LabelSet() = default;

  /// Assembles from per-vertex entry lists (no sentinels); appends sentinels.
  static LabelSet from_lists(const std::vector<std::vector<Rank>>& ranks,
                             const std::vector<std::vector<D>>& dists,
                             const std::vector<std::vector<VertexId>>* parents = nullptr) {
    const std::size_t n = ranks.size();
    LabelSet set;
    set.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) set.offsets_[v + 1] = set.offsets_[v] + ranks[v].size() + 1;
    const std::size_t total = set.offsets_[n];
    set.ranks_.reserve(total);
    set.dists_.reserve(total);
    if (parents) set.parents_.reserve(total);
    for (std::size_t v = 0; v < n; ++v) {
      set.ranks_.insert(set.ranks_.end(), ranks[v].begin(), ranks[v].end());
      set.ranks_.push_back(static_cast<Rank>(n));
      set.dists_.insert(set.dists_.end(), dists[v].begin(), dists[v].end());
      set.dists_.push_back(kInfOf<D>);
      if (parents) {
        set.parents_.insert(set.parents_.end(), (*parents)[v].begin(), (*parents)[v].end());
        set.parents_.push_back(kNoParent);
      }
    }
    return set;
  }

  /// Adopts flat arrays, validating the layout; throws std::invalid_argument.
  static LabelSet from_arrays(std::vector<std::size_t> offsets, std::vector<Rank> ranks,
                              std::vector<D> dists, std::vector<VertexId> parents = {}) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != ranks.size() ||
        dists.size() != ranks.size() || (!parents.empty() && parents.size() != ranks.size())) {
      throw std::invalid_argument("inconsistent label arrays");
    }
    const std::size_t n = offsets.size() - 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (offsets[v + 1] <= offsets[v]) throw std::invalid_argument("label without sentinel");
      const std::size_t last = offsets[v + 1] - 1;
      if (ranks[last] != n || dists[last] != kInfOf<D>) {
        throw std::invalid_argument("label does not end in the sentinel");
      }
      for (std::size_t i = offsets[v]; i < last; ++i) {
        if (ranks[i] >= n || dists[i] == kInfOf<D> || (i > offsets[v] && ranks[i] <= ranks[i - 1])) {
          throw std::invalid_argument("label entries are not strictly increasing ranks");
        }
      }
    }
    LabelSet set;
    set.offsets_ = std::move(offsets);
    set.ranks_ = std::move(ranks);
    set.dists_ = std::move(dists);
    set.parents_ = std::move(parents);
    return set;
  }

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool empty() const { return num_vertices() == 0; }
  bool has_parents() const { return !parents_.empty(); }

  LabelView<D> operator[](VertexId v) const {
    const std::size_t begin = offsets_[v];
    const std::size_t len = offsets_[v + 1] - begin;
    LabelView<D> view{std::span(ranks_).subspan(begin, len), std::span(dists_).subspan(begin, len), {}};
    if (has_parents()) view.parents = std::span(parents_).subspan(begin, len);
    return view;
  }

  // Entry counts exclude sentinels.
  std::size_t entry_count(VertexId v) const { return offsets_[v + 1] - offsets_[v] - 1; }
  std::size_t total_entries() const { return ranks_.size() - num_vertices(); }

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const Rank> ranks() const { return ranks_; }
  std::span<const D> dists() const { return dists_; }
  std::span<const VertexId> parents() const { return parents_; }

  bool operator==(const LabelSet&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Rank> ranks_;
  std::vector<D> dists_;
  std::vector<VertexId> parents_;
};

/// Position of `rank` in the label, or npos. Labels are sorted, so binary search.
template <typename D>
std::size_t find_rank(const LabelView<D>& label, Rank rank) {
  const auto entries = label.ranks.first(label.size());
  auto it = std::lower_bound(entries.begin(), entries.end(), rank);
  if (it == entries.end() || *it != rank) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - entries.begin());
}

}  // namespace pll
