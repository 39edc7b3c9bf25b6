#include "pll/oracle.hpp"

#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace pll::oracle {

DistanceRow sssp(const Graph& g, VertexId s, Direction dir) {
  const std::size_t n = g.num_vertices();
  if (s >= n) throw std::out_of_range("source out of range");
  DistanceRow row{s, std::vector<Distance>(n, kInfinity)};
  row.dist[s] = 0;
  if (!g.weighted()) {
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (const VertexId w : g.neighbors(u, dir)) {
        if (row.dist[w] == kInfinity) {
          row.dist[w] = row.dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return row;
  }
  using Item = std::pair<Distance, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, s);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > row.dist[u]) continue;
    const auto nbrs = g.neighbors(u, dir);
    const auto ws = g.edge_weights(u, dir);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Distance nd = d + ws[i];
      if (nd < row.dist[nbrs[i]]) {
        row.dist[nbrs[i]] = nd;
        heap.emplace(nd, nbrs[i]);
      }
    }
  }
  return row;
}

std::vector<VertexId> shortest_path_set(const Graph& g, VertexId s, VertexId t) {
  const auto from_s = sssp(g, s, Direction::kForward);
  const auto to_t = sssp(g, t, Direction::kReverse);
  std::vector<VertexId> set;
  const Distance total = from_s.dist[t];
  if (total == kInfinity) return set;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (from_s.dist[v] != kInfinity && to_t.dist[v] != kInfinity &&
        from_s.dist[v] + to_t.dist[v] == total) {
      set.push_back(v);
    }
  }
  return set;
}

Index build_naive_labels(const Graph& g, const VertexOrder& order) {
  if (g.directed() || g.weighted()) {
    throw std::invalid_argument("naive labels are built for undirected unweighted graphs");
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Rank>> ranks(n);
  std::vector<std::vector<HopDistance>> dists(n);
  for (Rank k = 0; k < n; ++k) {
    const auto row = sssp(g, order.vertex_at(k));
    for (VertexId u = 0; u < n; ++u) {
      if (row.dist[u] == kInfinity) continue;
      if (row.dist[u] >= kInf8) throw OverflowError("hop distance exceeds 254");
      ranks[u].push_back(k);
      dists[u].push_back(static_cast<HopDistance>(row.dist[u]));
    }
  }
  HopLabelSets sets;
  sets.out = LabelSet<HopDistance>::from_lists(ranks, dists);
  IndexMetadata meta;
  meta.bp_roots = 0;
  meta.num_edge_slots = g.num_edge_slots();
  std::vector<std::uint64_t> ids(g.external_ids().begin(), g.external_ids().end());
  return Index(meta, order, std::move(ids), std::move(sets));
}

Distance prefix_query(const Index& naive, VertexId s, VertexId t, Rank k) {
  const auto& labels = naive.hop_labels().out;
  const auto a = labels[s];
  const auto b = labels[t];
  Distance best = kInfinity;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.ranks[i] >= k) break;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.ranks[j] >= k) break;
      if (a.ranks[i] == b.ranks[j]) {
        best = std::min(best, Distance{a.dists[i]} + Distance{b.dists[j]});
      }
    }
  }
  return best;
}

}  // namespace pll::oracle
