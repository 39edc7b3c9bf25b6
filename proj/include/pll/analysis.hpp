#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pll/index.hpp"
#include "pll/labeling.hpp"

namespace pll::analysis {

inline constexpr std::size_t kDefaultCoveragePairs = 1'000'000;

/// How many sampled connected pairs are answerable after the first k pruned
/// searches, for k = 0..n. Pairs answered by bit-parallel labels count as
/// covered at k = 0.
struct CoverageCurve {
  std::size_t num_vertices = 0;
  std::uint64_t pairs_sampled = 0;
  std::uint64_t pairs_connected = 0;
  std::vector<std::uint64_t> covered;  // size n + 1, cumulative

  // Same, bucketed by true distance (distances ascending).
  std::vector<Distance> distances;
  std::vector<std::uint64_t> pairs_at_distance;
  std::vector<std::vector<std::uint64_t>> covered_at_distance;

  double fraction(std::size_t k) const;
  double fraction_at_distance(std::size_t bucket, std::size_t k) const;
};

/// Samples min(pairs, n(n-1)) ordered pairs s != t (every pair when that is
/// all of them) and records when each becomes covered.
CoverageCurve analyze_coverage(const Index& index, std::size_t pairs, std::uint64_t seed);

/// Smallest k whose covered count reaches `fraction` of `total`, or
/// covered.size() if never.
std::size_t first_k_reaching(const std::vector<std::uint64_t>& covered, std::uint64_t total,
                             double fraction);

/// Per-vertex normal label sizes (both label sets for directed indices),
/// ascending.
std::vector<std::size_t> label_size_distribution(const Index& index);

// CSV writers (header line first).
// prune.csv:       k,root,visited,labeled,cumulative_labeled,cumulative_fraction
// coverage.csv:    k,all,d<distance>...
// label_sizes.csv: position,label_size
void write_prune_csv(std::ostream& out, const BuildStats& stats, const Index& index);
void write_coverage_csv(std::ostream& out, const CoverageCurve& curve);
void write_label_sizes_csv(std::ostream& out, const std::vector<std::size_t>& sizes);

}  // namespace pll::analysis
