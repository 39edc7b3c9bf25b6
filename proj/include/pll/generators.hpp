#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pll/graph.hpp"

namespace pll::gen {

// Synthetic edge lists over ids 0..n-1 for dataset-free testing. Every id in
// 0..n-1 appears (isolated ones as self-loops) so Graph::from_edges keeps n.

/// G(n, m): `edges` distinct uniformly random pairs (ordered pairs if directed).
std::vector<Edge> erdos_renyi(std::size_t n, std::size_t edges, std::uint64_t seed,
                              bool directed = false);

/// Barabási–Albert preferential attachment: each new vertex attaches to
/// `per_vertex` distinct existing vertices chosen proportionally to degree.
std::vector<Edge> preferential_attachment(std::size_t n, std::size_t per_vertex,
                                          std::uint64_t seed);

/// Assigns uniform integer weights in [lo, hi].
void assign_weights(std::vector<Edge>& edges, Weight lo, Weight hi, std::uint64_t seed);

}  // namespace pll::gen
