#pragma once

#include <optional>
#include <vector>

#include "pll/graph.hpp"
#include "pll/index.hpp"
#include "pll/labeling.hpp"
#include "pll/ordering.hpp"

namespace pll {

/// Forward and reverse pruned BFSs per root over a directed unweighted graph.
Index build_index_directed(const Graph& g, const VertexOrder& order, bool record_paths = false,
                           BuildStats* stats = nullptr);

/// Pruned Dijkstra per root (both directions when the graph is directed).
/// The pruning test runs when a vertex is settled.
Index build_index_weighted(const Graph& g, const VertexOrder& order, bool record_paths = false,
                           BuildStats* stats = nullptr);

/// Shortest path s..t reconstructed from parent pointers, or nullopt when t is
/// unreachable from s. Throws std::logic_error if the index has no path labels.
std::optional<std::vector<VertexId>> query_path(const Index& index, VertexId s, VertexId t);

}  // namespace pll
