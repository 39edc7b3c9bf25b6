#include "pll/index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pll {

Index::Index(IndexMetadata meta, VertexOrder order, std::vector<std::uint64_t> external_ids,
             Labels labels)
    : meta_(meta), order_(std::move(order)), external_ids_(std::move(external_ids)),
      labels_(std::move(labels)) {
  const std::size_t n = order_.size();
  if (external_ids_.size() != n) throw std::invalid_argument("id map size does not match order");
  std::visit(
      [&](const auto& sets) {
        if (sets.out.num_vertices() != n) throw std::invalid_argument("label count does not match n");
        if (meta_.flags.directed && sets.in.num_vertices() != n) {
          throw std::invalid_argument("directed index without in-labels");
        }
        if (!sets.bit_parallel.empty() && sets.bit_parallel.num_vertices() != n) {
          throw std::invalid_argument("bit-parallel label count does not match n");
        }
      },
      labels_);
  meta_.flags.weighted = std::holds_alternative<WeightedLabelSets>(labels_);
  by_external_.resize(n);
  std::iota(by_external_.begin(), by_external_.end(), VertexId{0});
  std::sort(by_external_.begin(), by_external_.end(),
            [&](VertexId a, VertexId b) { return external_ids_[a] < external_ids_[b]; });
}

std::optional<VertexId> Index::find_vertex(std::uint64_t external) const {
  auto it = std::lower_bound(by_external_.begin(), by_external_.end(), external,
                             [&](VertexId v, std::uint64_t x) { return external_ids_[v] < x; });
  if (it == by_external_.end() || external_ids_[*it] != external) return std::nullopt;
  return *it;
}

std::size_t Index::total_label_entries() const {
  return std::visit(
      [](const auto& sets) {
        std::size_t total = sets.out.total_entries();
        if (!sets.in.empty()) total += sets.in.total_entries();
        return total;
      },
      labels_);
}

std::size_t Index::total_bp_entries() const {
  return std::visit([](const auto& sets) { return sets.bit_parallel.total_entries(); }, labels_);
}

std::size_t Index::label_entries(VertexId v) const {
  return std::visit(
      [v](const auto& sets) {
        std::size_t total = sets.out.entry_count(v);
        if (!sets.in.empty()) total += sets.in.entry_count(v);
        return total;
      },
      labels_);
}

Distance query_distance(const Index& index, VertexId s, VertexId t) {
  const std::size_t n = index.num_vertices();
  if (s >= n || t >= n) {
    throw std::out_of_range("query vertex out of range (n = " + std::to_string(n) + ")");
  }
  const bool directed = index.flags().directed;
  return std::visit([&](const auto& sets) { return query_labels(sets, directed, s, t); },
                    index.labels());
}

}  // namespace pll
