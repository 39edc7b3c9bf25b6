#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pll/bit_parallel.hpp"
#include "pll/graph.hpp"
#include "pll/index.hpp"
#include "pll/label_set.hpp"
#include "pll/ordering.hpp"

namespace pll {

struct BuildOptions {
  std::uint32_t bp_roots = 0;  // t; clipped to the roots available
  std::uint32_t bp_width = kMaxBitParallelWidth;
  bool record_paths = false;
};

/// Per-root instrumentation. For directed graphs each record sums the forward
/// and reverse searches of that root.
struct SearchStep {
  Rank rank = 0;
  VertexId root = 0;
  std::uint32_t visited = 0;  // dequeued (or settled) vertices
  std::uint32_t labeled = 0;  // vertices that received an entry
  std::uint32_t resets = 0;   // workspace cells restored after the search
};

struct BuildStats {
  std::vector<SearchStep> steps;
  std::uint32_t bp_roots_requested = 0;
  std::uint32_t bp_roots_used = 0;
};

/// Pruning-test distance for a search rooted at v_k. `root_table[r]` holds the
/// distance from v_k to the rank-r hub (inf when absent). Runs in time linear
/// in the label size.
template <typename D>
inline Distance root_query(std::span<const D> root_table, const LabelView<D>& label) {
  Distance best = kInfinity;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const D via = root_table[label.ranks[i]];
    if (via == kInfOf<D>) continue;
    const Distance d = Distance{via} + Distance{label.dists[i]};
    if (d < best) best = d;
  }
  return best;
}

/// Incremental pruned-BFS construction over an unweighted graph, one root per
/// step in rank order. Bit-parallel roots (undirected graphs only) are
/// processed in the constructor. Between steps the builder answers queries
/// against the prefix index built so far.
class PrunedLabelBuilder {
 public:
  PrunedLabelBuilder(const Graph& g, VertexOrder order, BuildOptions options = {});

  std::size_t num_vertices() const { return n_; }
  Rank next_rank() const { return next_; }
  bool done() const { return next_ == n_; }

  /// Pruned BFS from vertex_at(next_rank()); forward then reverse when directed.
  SearchStep step();
  void run();

  /// Query against the current prefix (bit-parallel labels included).
  Distance query(VertexId s, VertexId t) const;

  // Current label of v; `in` selects the in-label of a directed graph.
  std::span<const Rank> label_ranks(VertexId v, bool in = false) const;
  std::span<const HopDistance> label_dists(VertexId v, bool in = false) const;

  const BuildStats& stats() const { return stats_; }
  const std::vector<BpRoot>& bp_roots() const { return bp_roots_; }

  /// Packs the labels into an Index; the builder is consumed.
  Index finish() &&;

 private:
  struct Lists {
    std::vector<std::vector<Rank>> ranks;
    std::vector<std::vector<HopDistance>> dists;
    std::vector<std::vector<VertexId>> parents;
  };

  void build_bit_parallel();
  std::uint32_t pruned_bfs(Rank k, Direction dir, std::uint32_t& visited, std::uint32_t& resets);
  bool bp_prunes(VertexId root, VertexId u, HopDistance d) const;

  const Graph* g_;
  VertexOrder order_;
  BuildOptions options_;
  std::size_t n_;
  bool directed_;
  Rank next_ = 0;

  Lists out_;
  Lists in_;  // directed only

  // Dense bit-parallel rows: vertex v, root i at v * bp_count_ + i.
  std::size_t bp_count_ = 0;
  std::vector<BpRoot> bp_roots_;
  std::vector<Rank> bp_root_ranks_;
  std::vector<HopDistance> bp_dist_;
  std::vector<NeighborMask> bp_m1_;
  std::vector<NeighborMask> bp_m0_;

  // Workspace, restored lazily after each search.
  std::vector<HopDistance> tentative_;
  std::vector<HopDistance> root_table_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> parent_;

  BuildStats stats_;
};

/// Pruned landmark labeling of an undirected unweighted graph.
Index build_index(const Graph& g, const VertexOrder& order, BuildStats* stats = nullptr);

/// `bp_roots` bit-parallel BFSs followed by pruned BFSs from every vertex.
Index build_index_hybrid(const Graph& g, const VertexOrder& order, std::uint32_t bp_roots,
                         std::uint32_t bp_width = kMaxBitParallelWidth, BuildStats* stats = nullptr);

/// Dispatches on the graph kind: pruned BFS (undirected or directed, optional
/// bit-parallel stage) or pruned Dijkstra for weighted graphs.
Index build(const Graph& g, const VertexOrder& order, const BuildOptions& options = {},
            BuildStats* stats = nullptr);

}  // namespace pll
