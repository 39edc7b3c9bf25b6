#pragma once

#include <vector>

#include "pll/graph.hpp"
#include "pll/index.hpp"
#include "pll/ordering.hpp"

namespace pll::oracle {

// Ground truth for tests and verification: plain BFS / Dijkstra, no pruning.

struct DistanceRow {
  VertexId source = 0;
  std::vector<Distance> dist;  // kInfinity when unreachable
};

// BFS on unweighted graphs, Dijkstra on weighted ones. kReverse gives
// distances *to* the source on directed graphs.
DistanceRow sssp(const Graph& g, VertexId s, Direction dir = Direction::kForward);

// Vertices v with d(s, v) + d(v, t) = d(s, t), ascending; empty if disconnected.
std::vector<VertexId> shortest_path_set(const Graph& g, VertexId s, VertexId t);

/// Unpruned landmark labeling: a full BFS from every vertex in rank order.
/// Undirected unweighted graphs only.
Index build_naive_labels(const Graph& g, const VertexOrder& order);

/// Query restricted to hubs of rank < k, i.e. the index after the first k
/// searches of the naive method.
Distance prefix_query(const Index& naive, VertexId s, VertexId t, Rank k);

}  // namespace pll::oracle
