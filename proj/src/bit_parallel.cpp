#include "pll/bit_parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace pll {

Distance bp_query(const BitParallelEntry& s, const BitParallelEntry& t) {
  if (s.root_rank != t.root_rank) {
    throw std::invalid_argument("bit-parallel entries refer to different roots");
  }
  if (s.dist == kInf8 || t.dist == kInf8) return kInfinity;
  return detail::bp_query_unchecked(s, t);
}

BitParallelLabels BitParallelLabels::from_arrays(std::vector<std::size_t> offsets,
                                                 std::vector<BitParallelEntry> entries) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != entries.size()) {
    throw std::invalid_argument("inconsistent bit-parallel label arrays");
  }
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    if (offsets[v + 1] < offsets[v]) throw std::invalid_argument("bit-parallel offsets decrease");
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      const auto& e = entries[i];
      if (e.dist == kInf8 || (e.mask_m1 & e.mask_0) != 0 ||
          (i > offsets[v] && e.root_rank <= entries[i - 1].root_rank)) {
        throw std::invalid_argument("malformed bit-parallel label entry");
      }
    }
  }
  BitParallelLabels labels;
  labels.offsets_ = std::move(offsets);
  labels.entries_ = std::move(entries);
  return labels;
}

BpBfsResult bp_bfs(const Graph& g, VertexId root, std::span<const VertexId> neighbor_set) {
  const std::size_t n = g.num_vertices();
  if (g.directed() || g.weighted()) {
    throw std::invalid_argument("bit-parallel BFS needs an undirected unweighted graph");
  }
  if (neighbor_set.size() > kMaxBitParallelWidth) {
    throw std::invalid_argument("bit-parallel neighbor set exceeds 64 vertices");
  }
  const auto root_nbrs = g.neighbors(root);

  BpBfsResult res{std::vector<HopDistance>(n, kInf8), std::vector<NeighborMask>(n, 0),
                  std::vector<NeighborMask>(n, 0)};
  res.dist[root] = 0;

  std::vector<VertexId> current{root};
  std::vector<VertexId> next;
  for (std::size_t j = 0; j < neighbor_set.size(); ++j) {
    const VertexId s = neighbor_set[j];
    if (!std::binary_search(root_nbrs.begin(), root_nbrs.end(), s)) {
      throw std::invalid_argument("vertex " + std::to_string(s) + " is not a neighbor of root " +
                                  std::to_string(root));
    }
    if (res.dist[s] != kInf8) throw std::invalid_argument("repeated member in neighbor set");
    res.dist[s] = 1;
    res.mask_m1[s] = NeighborMask{1} << j;
    next.push_back(s);
  }

  std::vector<std::pair<VertexId, VertexId>> same_level;  // E_0
  std::vector<std::pair<VertexId, VertexId>> next_level;  // E_1
  while (!current.empty()) {
    same_level.clear();
    next_level.clear();
    for (const VertexId v : current) {
      const HopDistance dv = res.dist[v];
      for (const VertexId u : g.neighbors(v)) {
        const HopDistance du = res.dist[u];
        if (du == kInf8 || du == dv + 1) {
          next_level.emplace_back(v, u);
          if (du == kInf8) {
            if (dv + 1 >= kInf8) throw OverflowError("hop distance exceeds 254 in bit-parallel BFS");
            res.dist[u] = static_cast<HopDistance>(dv + 1);
            next.push_back(u);
          }
        } else if (du == dv) {
          same_level.emplace_back(v, u);
        }
      }
    }
    for (const auto& [v, u] : same_level) res.mask_0[u] |= res.mask_m1[v];
    for (const auto& [v, u] : next_level) {
      res.mask_m1[u] |= res.mask_m1[v];
      res.mask_0[u] |= res.mask_0[v];
    }
    current.swap(next);
    next.clear();
  }
  for (std::size_t v = 0; v < n; ++v) res.mask_0[v] &= ~res.mask_m1[v];
  return res;
}

std::vector<BpRoot> select_bp_roots(const Graph& g, const VertexOrder& order, std::size_t count,
                                    std::uint32_t width) {
  if (width == 0 || width > kMaxBitParallelWidth) {
    throw std::invalid_argument("bit-parallel width must be in 1..64");
  }
  const std::size_t n = g.num_vertices();
  std::vector<bool> used(n, false);
  std::vector<BpRoot> roots;
  Rank next = 0;
  while (roots.size() < count) {
    while (next < n && used[order.vertex_at(next)]) ++next;
    if (next == n) break;
    BpRoot pick;
    pick.root = order.vertex_at(next);
    used[pick.root] = true;
    for (const VertexId w : g.neighbors(pick.root)) {
      if (!used[w]) pick.neighbor_set.push_back(w);
    }
    std::sort(pick.neighbor_set.begin(), pick.neighbor_set.end(),
              [&](VertexId a, VertexId b) { return order.rank_of(a) < order.rank_of(b); });
    if (pick.neighbor_set.size() > width) pick.neighbor_set.resize(width);
    for (const VertexId w : pick.neighbor_set) used[w] = true;
    roots.push_back(std::move(pick));
  }
  return roots;
}

}  // namespace pll
