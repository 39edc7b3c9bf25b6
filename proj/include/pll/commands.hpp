#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pll/graph.hpp"
#include "pll/index.hpp"
#include "pll/labeling.hpp"
#include "pll/ordering.hpp"

namespace pll {

// Library side of the `pll` command line tool.

struct ConstructConfig {
  bool directed = false;
  bool weighted = false;
  bool paths = false;
  OrderOptions order;
  std::optional<std::uint32_t> bp_roots;  // default_bp_roots() when unset
  std::uint32_t bp_width = kMaxBitParallelWidth;
};

struct BuildReport {
  std::size_t num_vertices = 0;
  std::size_t num_edge_slots = 0;
  OrderStrategy order = OrderStrategy::kDegree;
  double indexing_time_s = 0;
  std::uint64_t index_bytes = 0;
  double avg_label_entries = 0;  // sentinels excluded
  double avg_bp_entries = 0;
  std::uint32_t bp_roots_requested = 0;
  std::uint32_t bp_roots_used = 0;
  std::vector<std::uint32_t> labeled_per_root;

  bool bp_clipped() const { return bp_roots_used < bp_roots_requested; }
};

/// 16 bit-parallel roots below 10M adjacency slots, 64 above; 0 where
/// bit-parallel labels do not apply (directed, weighted, or path labels).
std::uint32_t default_bp_roots(const Graph& g, bool paths);

/// Builds the index for `g` and fills everything in the report except
/// index_bytes. Timing covers ordering and labeling.
Index construct_index(const Graph& g, const ConstructConfig& config, BuildReport& report,
                      BuildStats* stats = nullptr);

/// Loads the graph, builds, saves to `out`, and reports.
BuildReport run_construct(const std::filesystem::path& graph, const std::filesystem::path& out,
                          const ConstructConfig& config);

void print_report(std::ostream& out, const BuildReport& report);

/// Reads "u v" external-id pairs and writes one answer per line: the
/// distance, "inf", or "error: ..." for bad lines. With `paths`, the vertex
/// sequence follows the distance after a tab.
void run_queries(const Index& index, std::istream& pairs, std::ostream& out, bool paths = false);

struct Mismatch {
  VertexId s = 0;
  VertexId t = 0;
  Distance expected = 0;
  Distance actual = 0;
};

struct VerifyOptions {
  std::optional<std::uint64_t> sampled_pairs;  // exhaustive when unset
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Mismatch> witness;

  bool passed() const { return mismatches == 0; }
};

/// Compares the index against BFS/Dijkstra distances. Sampled mode runs a
/// search from ceil(k / n) random sources and checks k pairs in total. Throws
/// std::invalid_argument if the graph and index disagree on the vertex set.
VerifyReport verify_index(const Graph& g, const Index& index, const VerifyOptions& options = {});

struct LatencyStats {
  std::size_t queries = 0;
  double avg_us = 0;
  double p50_us = 0;
  double p90_us = 0;
  double p99_us = 0;
  double max_us = 0;
  std::uint64_t checksum = 0;  // sum of finite answers, keeps the loop honest
};

std::vector<std::pair<VertexId, VertexId>> random_query_pairs(std::size_t n, std::size_t count,
                                                              std::uint64_t seed);

/// Average over one timed batch; percentiles from a second, per-query timed pass.
LatencyStats bench_queries(const Index& index, std::size_t count, std::uint64_t seed);

std::string format_latency(const LatencyStats& stats);

}  // namespace pll
