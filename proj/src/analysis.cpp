#include "pll/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

namespace pll::analysis {

namespace {

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Step after which the pair (s, t) at true distance `truth` is answerable.
template <typename D>
std::size_t covered_at(const LabelSets<D>& sets, bool directed, VertexId s, VertexId t,
                       Distance truth) {
  if (!sets.bit_parallel.empty() &&
      bp_query(sets.bit_parallel[s], sets.bit_parallel[t]) == truth) {
    return 0;
  }
  const auto a = sets.out[s];
  const auto b = directed ? sets.in[t] : sets.out[t];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.ranks[i] == b.ranks[j]) {
      if (Distance{a.dists[i]} + Distance{b.dists[j]} == truth) return std::size_t{a.ranks[i]} + 1;
      ++i;
      ++j;
    } else if (a.ranks[i] < b.ranks[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

double CoverageCurve::fraction(std::size_t k) const {
  return pairs_connected == 0 ? 1.0 : static_cast<double>(covered[k]) / pairs_connected;
}

double CoverageCurve::fraction_at_distance(std::size_t bucket, std::size_t k) const {
  const auto total = pairs_at_distance[bucket];
  return total == 0 ? 1.0 : static_cast<double>(covered_at_distance[bucket][k]) / total;
}

CoverageCurve analyze_coverage(const Index& index, std::size_t pairs, std::uint64_t seed) {
  const std::size_t n = index.num_vertices();
  CoverageCurve curve;
  curve.num_vertices = n;
  curve.covered.assign(n + 1, 0);

  std::vector<std::pair<Distance, std::size_t>> events;  // (distance, covered_at)
  const auto record = [&](VertexId s, VertexId t) {
    ++curve.pairs_sampled;
    const Distance truth = query_distance(index, s, t);
    if (truth == kInfinity) return;
    ++curve.pairs_connected;
    const std::size_t k = std::visit(
        [&](const auto& sets) { return covered_at(sets, index.flags().directed, s, t, truth); },
        index.labels());
    events.emplace_back(truth, k);
  };

  const std::uint64_t all_pairs = n < 2 ? 0 : std::uint64_t{n} * (n - 1);
  if (all_pairs <= pairs) {
    for (VertexId s = 0; s < n; ++s) {
      for (VertexId t = 0; t < n; ++t) {
        if (s != t) record(s, t);
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    for (std::size_t i = 0; i < pairs; ++i) {
      VertexId s = pick(rng), t = pick(rng);
      while (t == s) t = pick(rng);
      record(s, t);
    }
  }

  for (const auto& [d, k] : events) curve.distances.push_back(d);
  std::sort(curve.distances.begin(), curve.distances.end());
  curve.distances.erase(std::unique(curve.distances.begin(), curve.distances.end()),
                        curve.distances.end());
  curve.pairs_at_distance.assign(curve.distances.size(), 0);
  curve.covered_at_distance.assign(curve.distances.size(), std::vector<std::uint64_t>(n + 1, 0));
  for (const auto& [d, k] : events) {
    const auto bucket = static_cast<std::size_t>(
        std::lower_bound(curve.distances.begin(), curve.distances.end(), d) - curve.distances.begin());
    ++curve.pairs_at_distance[bucket];
    if (k <= n) {
      ++curve.covered[k];
      ++curve.covered_at_distance[bucket][k];
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    curve.covered[k] += curve.covered[k - 1];
    for (auto& row : curve.covered_at_distance) row[k] += row[k - 1];
  }
  return curve;
}

std::size_t first_k_reaching(const std::vector<std::uint64_t>& covered, std::uint64_t total,
                             double fraction) {
  for (std::size_t k = 0; k < covered.size(); ++k) {
    if (static_cast<double>(covered[k]) >= fraction * static_cast<double>(total)) return k;
  }
  return covered.size();
}

std::vector<std::size_t> label_size_distribution(const Index& index) {
  std::vector<std::size_t> sizes(index.num_vertices());
  for (VertexId v = 0; v < sizes.size(); ++v) sizes[v] = index.label_entries(v);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

void write_prune_csv(std::ostream& out, const BuildStats& stats, const Index& index) {
  std::uint64_t total = 0;
  for (const auto& s : stats.steps) total += s.labeled;
  out << "k,root,visited,labeled,cumulative_labeled,cumulative_fraction\n";
  std::uint64_t running = 0;
  for (const auto& s : stats.steps) {
    running += s.labeled;
    out << s.rank << ',' << index.external_ids()[s.root] << ',' << s.visited << ',' << s.labeled
        << ',' << running << ',' << fixed6(total == 0 ? 1.0 : static_cast<double>(running) / total)
        << '\n';
  }
}

void write_coverage_csv(std::ostream& out, const CoverageCurve& curve) {
  out << "k,all";
  for (const auto d : curve.distances) out << ",d" << d;
  out << '\n';
  for (std::size_t k = 0; k < curve.covered.size(); ++k) {
    out << k << ',' << fixed6(curve.fraction(k));
    for (std::size_t b = 0; b < curve.distances.size(); ++b) out << ',' << fixed6(curve.fraction_at_distance(b, k));
    out << '\n';
  }
}

void write_label_sizes_csv(std::ostream& out, const std::vector<std::size_t>& sizes) {
  out << "position,label_size\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) out << i << ',' << sizes[i] << '\n';
}

}  // namespace pll::analysis
