#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pll/graph.hpp"

namespace pll {

enum class OrderStrategy : std::uint8_t { kDegree = 0, kRandom = 1, kCloseness = 2, kCustom = 3 };

std::string_view to_string(OrderStrategy s);
OrderStrategy parse_order_strategy(std::string_view name);

/// The vertex visiting order. Rank 0 is processed first.
class VertexOrder {
 public:
  VertexOrder() = default;

  /// Throws std::invalid_argument unless `vertex_at` is a permutation of 0..n-1.
  static VertexOrder from_sequence(std::vector<VertexId> vertex_at,
                                   OrderStrategy strategy = OrderStrategy::kCustom);
  static VertexOrder identity(std::size_t n, OrderStrategy strategy = OrderStrategy::kCustom);

  std::size_t size() const { return vertex_at_.size(); }
  VertexId vertex_at(Rank r) const { return vertex_at_[r]; }
  Rank rank_of(VertexId v) const { return rank_of_[v]; }
  std::span<const VertexId> vertices() const { return vertex_at_; }
  std::span<const Rank> ranks() const { return rank_of_; }
  OrderStrategy strategy() const { return strategy_; }

  bool operator==(const VertexOrder&) const = default;

 private:
  std::vector<VertexId> vertex_at_;
  std::vector<Rank> rank_of_;
  OrderStrategy strategy_ = OrderStrategy::kCustom;
};

inline constexpr std::size_t kDefaultClosenessSamples = 50;

VertexOrder order_random(const Graph& g, std::uint64_t seed);

// Descending degree (in + out for directed graphs), ties by ascending id.
VertexOrder order_degree(const Graph& g);

/// Approximate closeness: BFS from min(sample_count, n) distinct random
/// vertices; each vertex is scored by its summed hop distance to the samples
/// (n for unreachable) and ordered by ascending score, ties by ascending id.
VertexOrder order_closeness(const Graph& g, std::size_t sample_count, std::uint64_t seed);
VertexOrder order_closeness(const Graph& g, std::span<const VertexId> samples);

struct OrderOptions {
  OrderStrategy strategy = OrderStrategy::kDegree;
  std::uint64_t seed = 0;
  std::size_t closeness_samples = kDefaultClosenessSamples;
};

VertexOrder make_order(const Graph& g, const OrderOptions& options);

}  // namespace pll
