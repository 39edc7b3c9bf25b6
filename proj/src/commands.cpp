#include "pll/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pll/index_store.hpp"
#include "pll/oracle.hpp"
#include "pll/variants.hpp"

namespace pll {

namespace {

using Clock = std::chrono::steady_clock;

std::string sig4(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.4g", x);
  return buf;
}

}  // namespace

std::uint32_t default_bp_roots(const Graph& g, bool paths) {
  if (g.directed() || g.weighted() || paths) return 0;
  return g.num_edge_slots() < 10'000'000 ? 16 : 64;
}

Index construct_index(const Graph& g, const ConstructConfig& config, BuildReport& report,
                      BuildStats* stats) {
  BuildOptions options;
  options.bp_roots = config.bp_roots.value_or(default_bp_roots(g, config.paths));
  options.bp_width = config.bp_width;
  options.record_paths = config.paths;

  BuildStats local;
  const auto start = Clock::now();
  const VertexOrder order = make_order(g, config.order);
  Index index = build(g, order, options, &local);
  report.indexing_time_s = std::chrono::duration<double>(Clock::now() - start).count();

  const std::size_t n = g.num_vertices();
  report.num_vertices = n;
  report.num_edge_slots = g.num_edge_slots();
  report.order = config.order.strategy;
  report.avg_label_entries = n == 0 ? 0.0 : static_cast<double>(index.total_label_entries()) / n;
  report.avg_bp_entries = n == 0 ? 0.0 : static_cast<double>(index.total_bp_entries()) / n;
  report.bp_roots_requested = options.bp_roots;
  report.bp_roots_used = index.metadata().bp_roots;
  report.labeled_per_root.clear();
  for (const auto& s : local.steps) report.labeled_per_root.push_back(s.labeled);
  if (stats) *stats = std::move(local);
  return index;
}

BuildReport run_construct(const std::filesystem::path& graph, const std::filesystem::path& out,
                          const ConstructConfig& config) {
  const Graph g = load_edge_list_file(graph, config.directed, config.weighted);
  BuildReport report;
  const Index index = construct_index(g, config, report);
  report.index_bytes = save_index_file(index, out);
  return report;
}

void print_report(std::ostream& out, const BuildReport& r) {
  out << "vertices            " << r.num_vertices << '\n'
      << "edge_slots          " << r.num_edge_slots << '\n'
      << "order               " << to_string(r.order) << '\n'
      << "indexing_time_s     " << sig4(r.indexing_time_s) << '\n'
      << "index_bytes         " << r.index_bytes << '\n'
      << "avg_label_entries   " << sig4(r.avg_label_entries) << '\n'
      << "avg_bp_entries      " << sig4(r.avg_bp_entries) << '\n'
      << "bp_roots            " << r.bp_roots_used << '\n';
  if (r.bp_clipped()) {
    out << "note                bit-parallel roots clipped from " << r.bp_roots_requested << " to "
        << r.bp_roots_used << " (vertices exhausted)\n";
  }
}

void run_queries(const Index& index, std::istream& pairs, std::ostream& out, bool paths) {
  std::string line;
  while (std::getline(pairs, line)) {
    std::istringstream fields(line);
    std::uint64_t a = 0, b = 0;
    std::string extra;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(fields >> a >> b) || (fields >> extra)) {
      out << "error: malformed line\n";
      continue;
    }
    const auto s = index.find_vertex(a);
    const auto t = index.find_vertex(b);
    if (!s || !t) {
      out << "error: unknown vertex " << (s ? b : a) << '\n';
      continue;
    }
    const Distance d = query_distance(index, *s, *t);
    if (d == kInfinity) {
      out << "inf\n";
      continue;
    }
    out << d;
    if (paths) {
      const auto path = query_path(index, *s, *t);
      out << '\t';
      for (std::size_t i = 0; path && i < path->size(); ++i) {
        out << (i ? " " : "") << index.external_ids()[(*path)[i]];
      }
    }
    out << '\n';
  }
}

VerifyReport verify_index(const Graph& g, const Index& index, const VerifyOptions& options) {
  const std::size_t n = g.num_vertices();
  if (index.num_vertices() != n ||
      !std::equal(g.external_ids().begin(), g.external_ids().end(), index.external_ids().begin())) {
    throw std::invalid_argument("graph and index have different vertex sets");
  }
  if (g.directed() != index.flags().directed || g.weighted() != index.flags().weighted) {
    throw std::invalid_argument("graph and index disagree on directed/weighted flags");
  }

  VerifyReport report;
  const auto check_source = [&](VertexId s, const std::vector<VertexId>* targets) {
    const auto row = oracle::sssp(g, s);
    const auto check = [&](VertexId t) {
      ++report.pairs_checked;
      const Distance got = query_distance(index, s, t);
      if (got != row.dist[t]) {
        ++report.mismatches;
        if (!report.witness) report.witness = Mismatch{s, t, row.dist[t], got};
      }
    };
    if (targets) {
      for (const VertexId t : *targets) check(t);
    } else {
      for (VertexId t = 0; t < n; ++t) check(t);
    }
  };

  if (!options.sampled_pairs) {
    for (VertexId s = 0; s < n; ++s) check_source(s, nullptr);
    return report;
  }
  if (n == 0) return report;
  std::mt19937_64 rng(options.seed);
  std::vector<VertexId> sources(n);
  std::iota(sources.begin(), sources.end(), VertexId{0});
  std::shuffle(sources.begin(), sources.end(), rng);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::uint64_t remaining = *options.sampled_pairs;
  for (std::size_t i = 0; i < n && remaining > 0; ++i) {
    if (remaining >= n) {
      check_source(sources[i], nullptr);
      remaining -= n;
    } else {
      std::vector<VertexId> targets(remaining);
      for (auto& t : targets) t = pick(rng);
      check_source(sources[i], &targets);
      remaining = 0;
    }
  }
  return report;
}

std::vector<std::pair<VertexId, VertexId>> random_query_pairs(std::size_t n, std::size_t count,
                                                              std::uint64_t seed) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (n == 0) return pairs;
  pairs.reserve(count);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId s = pick(rng);
    pairs.emplace_back(s, pick(rng));
  }
  return pairs;
}

LatencyStats bench_queries(const Index& index, std::size_t count, std::uint64_t seed) {
  LatencyStats stats;
  const auto pairs = random_query_pairs(index.num_vertices(), count, seed);
  stats.queries = pairs.size();
  if (pairs.empty()) return stats;

  std::uint64_t checksum = 0;
  const auto start = Clock::now();
  for (const auto& [s, t] : pairs) {
    const Distance d = query_distance(index, s, t);
    if (d != kInfinity) checksum += d;
  }
  const double total_us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
  stats.avg_us = total_us / static_cast<double>(pairs.size());
  stats.checksum = checksum;

  std::vector<double> samples;
  samples.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    const auto t0 = Clock::now();
    const Distance d = query_distance(index, s, t);
    const auto t1 = Clock::now();
    if (d != kInfinity) checksum -= d;
    samples.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  if (checksum != 0) throw std::logic_error("query answers changed between bench passes");
  std::sort(samples.begin(), samples.end());
  const auto pct = [&](double p) {
    const auto idx = static_cast<std::size_t>(p * static_cast<double>(samples.size() - 1));
    return samples[idx];
  };
  stats.p50_us = pct(0.50);
  stats.p90_us = pct(0.90);
  stats.p99_us = pct(0.99);
  stats.max_us = samples.back();
  return stats;
}

std::string format_latency(const LatencyStats& s) {
  std::ostringstream out;
  out << "queries " << s.queries << '\n';
  if (s.queries == 0) return out.str();
  out << "avg_us  " << sig4(s.avg_us) << '\n'
      << "p50_us  " << sig4(s.p50_us) << '\n'
      << "p90_us  " << sig4(s.p90_us) << '\n'
      << "p99_us  " << sig4(s.p99_us) << '\n'
      << "max_us  " << sig4(s.max_us) << '\n';
  return out.str();
}

}  // namespace pll
