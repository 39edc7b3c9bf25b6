#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pll/bit_parallel.hpp"
#include "pll/label_set.hpp"
#include "pll/ordering.hpp"
#include "pll/types.hpp"

namespace pll {

struct IndexFlags {
  bool directed = false;
  bool weighted = false;
  bool paths = false;

  bool operator==(const IndexFlags&) const = default;
};

/// The label sets of one index. Undirected indices use `out` only; directed
/// indices answer s->t with out[s] and in[t]. Bit-parallel labels exist only
/// for undirected unweighted indices.
template <typename D>
struct LabelSets {
  LabelSet<D> out;
  LabelSet<D> in;
  BitParallelLabels bit_parallel;

  bool operator==(const LabelSets&) const = default;
};

using HopLabelSets = LabelSets<HopDistance>;
using WeightedLabelSets = LabelSets<WeightedDistance>;

struct IndexMetadata {
  IndexFlags flags;
  std::uint32_t bp_width = kMaxBitParallelWidth;
  std::uint32_t bp_roots = 0;  // bit-parallel roots actually used
  std::uint64_t num_edge_slots = 0;

  bool operator==(const IndexMetadata&) const = default;
};

/// A built, immutable distance index.
class Index {
 public:
  using Labels = std::variant<HopLabelSets, WeightedLabelSets>;

  Index() = default;
  Index(IndexMetadata meta, VertexOrder order, std::vector<std::uint64_t> external_ids,
        Labels labels);

  std::size_t num_vertices() const { return order_.size(); }
  const IndexMetadata& metadata() const { return meta_; }
  const IndexFlags& flags() const { return meta_.flags; }
  const VertexOrder& order() const { return order_; }
  std::span<const std::uint64_t> external_ids() const { return external_ids_; }
  std::optional<VertexId> find_vertex(std::uint64_t external) const;

  const Labels& labels() const { return labels_; }
  const HopLabelSets& hop_labels() const { return std::get<HopLabelSets>(labels_); }
  const WeightedLabelSets& weighted_labels() const { return std::get<WeightedLabelSets>(labels_); }

  // Normal label entries over all label sets, sentinels excluded.
  std::size_t total_label_entries() const;
  std::size_t total_bp_entries() const;
  std::size_t label_entries(VertexId v) const;

  bool operator==(const Index&) const = default;

 private:
  IndexMetadata meta_;
  VertexOrder order_;
  std::vector<std::uint64_t> external_ids_;
  std::vector<VertexId> by_external_;  // dense ids sorted by external id
  Labels labels_;
};

template <typename D>
inline Distance query_labels(const LabelSets<D>& sets, bool directed, VertexId s, VertexId t) {
  Distance best = kInfinity;
  if (!sets.bit_parallel.empty()) best = bp_query(sets.bit_parallel[s], sets.bit_parallel[t]);
  const auto normal = merge_join(sets.out[s], directed ? sets.in[t] : sets.out[t]).distance;
  return normal < best ? normal : best;
}

/// Exact distance from s to t, or kInfinity. Throws std::out_of_range for
/// vertices outside 0..n-1.
Distance query_distance(const Index& index, VertexId s, VertexId t);

}  // namespace pll
