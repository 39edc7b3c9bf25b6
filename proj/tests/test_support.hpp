#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pll/generators.hpp"
#include "pll/graph.hpp"
#include "pll/index.hpp"
#include "pll/oracle.hpp"

namespace pll::test {

inline Graph make_graph(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                        bool directed = false) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) edges.push_back({u, v, 1});
  return Graph::from_edges(edges, directed, false);
}

inline Graph make_weighted(const std::vector<Edge>& edges, bool directed = false) {
  return Graph::from_edges(edges, directed, true);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  if (n == 1) edges.push_back({0, 0, 1});
  return Graph::from_edges(edges, false, false);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::uint64_t i = 1; i <= leaves; ++i) edges.push_back({0, i, 1});
  return Graph::from_edges(edges, false, false);
}

inline Graph cycle_graph(std::size_t n, bool directed = false) {
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
  return Graph::from_edges(edges, directed, false);
}

inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed, bool directed = false) {
  return Graph::from_edges(gen::erdos_renyi(n, m, seed, directed), directed, false);
}

inline Graph scale_free(std::size_t n, std::size_t per_vertex, std::uint64_t seed) {
  return Graph::from_edges(gen::preferential_attachment(n, per_vertex, seed), false, false);
}

inline Graph random_weighted(std::size_t n, std::size_t m, Weight lo, Weight hi, std::uint64_t seed,
                             bool directed = false) {
  auto edges = gen::erdos_renyi(n, m, seed, directed);
  gen::assign_weights(edges, lo, hi, seed * 7 + 3);
  return Graph::from_edges(edges, directed, true);
}

using DistanceMatrix = std::vector<std::vector<Distance>>;

inline DistanceMatrix all_pairs(const Graph& g) {
  DistanceMatrix rows;
  for (VertexId s = 0; s < g.num_vertices(); ++s) rows.push_back(oracle::sssp(g, s).dist);
  return rows;
}

// Number of pairs where the index disagrees with the oracle.
inline std::size_t count_mismatches(const Index& index, const DistanceMatrix& truth) {
  std::size_t bad = 0;
  for (VertexId s = 0; s < truth.size(); ++s) {
    for (VertexId t = 0; t < truth.size(); ++t) {
      if (query_distance(index, s, t) != truth[s][t]) ++bad;
    }
  }
  return bad;
}

// Non-sentinel (rank, dist) entries of a hop label.
inline std::vector<std::pair<Rank, int>> entries(const Index& index, VertexId v, bool in = false) {
  const auto& sets = index.hop_labels();
  const auto label = in ? sets.in[v] : sets.out[v];
  std::vector<std::pair<Rank, int>> out;
  for (std::size_t i = 0; i < label.size(); ++i) out.emplace_back(label.ranks[i], int{label.dists[i]});
  return out;
}

using Entries = std::vector<std::pair<Rank, int>>;

// Index with label entry `drop` (flat position among non-sentinel entries of
// out-labels) removed.
inline Index drop_entry(const Index& index, std::size_t drop) {
  const auto& sets = index.hop_labels();
  const auto& out = sets.out;
  std::vector<std::size_t> offsets{0};
  std::vector<Rank> ranks;
  std::vector<HopDistance> dists;
  std::size_t seen = 0;
  for (VertexId v = 0; v < index.num_vertices(); ++v) {
    const auto label = out[v];
    for (std::size_t i = 0; i <= label.size(); ++i) {
      if (i < label.size() && seen++ == drop) continue;
      ranks.push_back(label.ranks[i]);
      dists.push_back(label.dists[i]);
    }
    offsets.push_back(ranks.size());
  }
  HopLabelSets changed;
  changed.out = LabelSet<HopDistance>::from_arrays(offsets, ranks, dists);
  changed.bit_parallel = sets.bit_parallel;
  std::vector<std::uint64_t> ids(index.external_ids().begin(), index.external_ids().end());
  return Index(index.metadata(), index.order(), std::move(ids), std::move(changed));
}

}  // namespace pll::test
