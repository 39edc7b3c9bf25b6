#include "pll/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace pll::gen {

namespace {

void add_isolated(std::vector<Edge>& edges, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const auto& e : edges) seen[e.from] = seen[e.to] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) edges.push_back({v, v, 1});
  }
}

}  // namespace

std::vector<Edge> erdos_renyi(std::size_t n, std::size_t edges, std::uint64_t seed, bool directed) {
  const std::uint64_t max_pairs = directed ? std::uint64_t{n} * (n - 1) : std::uint64_t{n} * (n - 1) / 2;
  if (n > 0 && edges > max_pairs) throw std::invalid_argument("more edges requested than pairs exist");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n == 0 ? 0 : n - 1);
  std::unordered_set<std::uint64_t> taken;
  std::vector<Edge> out;
  out.reserve(edges + n);
  while (out.size() < edges) {
    std::uint64_t u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (!directed && u > v) std::swap(u, v);
    if (!taken.insert(u * n + v).second) continue;
    out.push_back({u, v, 1});
  }
  add_isolated(out, n);
  return out;
}

std::vector<Edge> preferential_attachment(std::size_t n, std::size_t per_vertex, std::uint64_t seed) {
  if (per_vertex == 0) throw std::invalid_argument("per_vertex must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> out;
  // Endpoint multiset: sampling uniformly from it is degree-proportional.
  std::vector<std::uint64_t> endpoints;
  const std::size_t seed_size = std::min(n, per_vertex + 1);
  for (std::size_t u = 0; u < seed_size; ++u) {
    for (std::size_t v = u + 1; v < seed_size; ++v) {
      out.push_back({u, v, 1});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<std::uint64_t> chosen;
  for (std::size_t u = seed_size; u < n; ++u) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (chosen.size() < per_vertex) {
      const std::uint64_t v = endpoints[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    for (const auto v : chosen) {
      out.push_back({u, v, 1});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  add_isolated(out, n);
  return out;
}

void assign_weights(std::vector<Edge>& edges, Weight lo, Weight hi, std::uint64_t seed) {
  if (lo > hi) throw std::invalid_argument("empty weight range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> pick(lo, hi);
  for (auto& e : edges) e.weight = pick(rng);
}

}  // namespace pll::gen
