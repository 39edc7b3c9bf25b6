#include "pll/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace pll {

std::string_view to_string(OrderStrategy s) {
  switch (s) {
    case OrderStrategy::kDegree: return "degree";
    case OrderStrategy::kRandom: return "random";
    case OrderStrategy::kCloseness: return "closeness";
    case OrderStrategy::kCustom: return "custom";
  }
  return "unknown";
}

OrderStrategy parse_order_strategy(std::string_view name) {
  if (name == "degree") return OrderStrategy::kDegree;
  if (name == "random") return OrderStrategy::kRandom;
  if (name == "closeness") return OrderStrategy::kCloseness;
  if (name == "custom") return OrderStrategy::kCustom;
  throw std::invalid_argument("unknown order strategy '" + std::string(name) + "'");
}

VertexOrder VertexOrder::from_sequence(std::vector<VertexId> vertex_at, OrderStrategy strategy) {
  const std::size_t n = vertex_at.size();
  constexpr Rank kUnset = std::numeric_limits<Rank>::max();
  std::vector<Rank> rank_of(n, kUnset);
  for (std::size_t r = 0; r < n; ++r) {
    const VertexId v = vertex_at[r];
    if (v >= n || rank_of[v] != kUnset) {
      throw std::invalid_argument("vertex order is not a permutation of 0..n-1");
    }
    rank_of[v] = static_cast<Rank>(r);
  }
  VertexOrder order;
  order.vertex_at_ = std::move(vertex_at);
  order.rank_of_ = std::move(rank_of);
  order.strategy_ = strategy;
  return order;
}

VertexOrder VertexOrder::identity(std::size_t n, OrderStrategy strategy) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return from_sequence(std::move(seq), strategy);
}

VertexOrder order_random(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> seq(g.num_vertices());
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return VertexOrder::from_sequence(std::move(seq), OrderStrategy::kRandom);
}

VertexOrder order_degree(const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::stable_sort(seq.begin(), seq.end(),
                   [&](VertexId a, VertexId b) { return degree[a] > degree[b]; });
  return VertexOrder::from_sequence(std::move(seq), OrderStrategy::kDegree);
}

VertexOrder order_closeness(const Graph& g, std::span<const VertexId> samples) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  constexpr VertexId kUnreached = std::numeric_limits<VertexId>::max();
  std::vector<std::uint64_t> score(n, 0);
  std::vector<VertexId> dist(n);
  std::vector<VertexId> queue(n);
  for (const VertexId s : samples) {
    if (s >= n) throw std::out_of_range("closeness sample out of range");
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dist[s] = 0;
    while (head < tail) {
      const VertexId u = queue[head++];
      for (const VertexId w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) score[v] += dist[v] == kUnreached ? n : dist[v];
  }
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::stable_sort(seq.begin(), seq.end(),
                   [&](VertexId a, VertexId b) { return score[a] < score[b]; });
  return VertexOrder::from_sequence(std::move(seq), OrderStrategy::kCloseness);
}

VertexOrder order_closeness(const Graph& g, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw std::invalid_argument("closeness sample count must be >= 1");
  std::vector<VertexId> pool(g.num_vertices());
  std::iota(pool.begin(), pool.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(sample_count, pool.size()));
  return order_closeness(g, pool);
}

VertexOrder make_order(const Graph& g, const OrderOptions& options) {
  switch (options.strategy) {
    case OrderStrategy::kDegree: return order_degree(g);
    case OrderStrategy::kRandom: return order_random(g, options.seed);
    case OrderStrategy::kCloseness:
      return order_closeness(g, options.closeness_samples, options.seed);
    case OrderStrategy::kCustom: break;
  }
  throw std::invalid_argument("custom orders must be supplied explicitly");
}

}  // namespace pll
