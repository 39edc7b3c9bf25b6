#include <random>
#include <vector>

#include "doctest.h"
#include "pll/oracle.hpp"
#include "pll/ordering.hpp"
#include "test_support.hpp"

using namespace pll;

TEST_CASE("sssp") {
  CHECK(oracle::sssp(test::path_graph(3), 0).dist == std::vector<Distance>{0, 1, 2});

  const auto split = test::make_graph({{0, 1}, {2, 2}});
  CHECK(oracle::sssp(split, 0).dist[2] == kInfinity);

  const auto tri = test::make_weighted({{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
  CHECK(oracle::sssp(tri, 0).dist == std::vector<Distance>{0, 1, 2});

  const auto d = test::make_graph({{0, 1}, {1, 2}}, true);
  CHECK(oracle::sssp(d, 2, Direction::kReverse).dist == std::vector<Distance>{2, 1, 0});
  CHECK(oracle::sssp(d, 2).dist[0] == kInfinity);
}

TEST_CASE("sssp satisfies the triangle inequalities") {
  const auto g = test::random_weighted(120, 300, 1, 9, 4);
  const auto rows = test::all_pairs(g);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<VertexId> pick(0, 119);
  for (int i = 0; i < 5000; ++i) {
    const VertexId s = pick(rng), t = pick(rng), v = pick(rng);
    if (rows[s][v] == kInfinity || rows[v][t] == kInfinity) continue;
    CHECK(rows[s][t] <= rows[s][v] + rows[v][t]);
    CHECK(rows[s][t] + rows[v][t] >= rows[s][v]);
  }
  for (VertexId s = 0; s < 20; ++s) {
    CHECK(rows[s][s] == 0);
    for (VertexId u = 0; u < 120; ++u) {
      const auto ns = g.neighbors(u);
      const auto ws = g.edge_weights(u);
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (rows[s][u] == kInfinity) continue;
        const auto a = rows[s][u], b = rows[s][ns[i]];
        CHECK((a > b ? a - b : b - a) <= ws[i]);
      }
    }
  }
}

TEST_CASE("shortest path sets") {
  CHECK(oracle::shortest_path_set(test::path_graph(3), 0, 2) == std::vector<VertexId>{0, 1, 2});
  CHECK(oracle::shortest_path_set(test::cycle_graph(4), 0, 2) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(oracle::shortest_path_set(test::make_graph({{0, 1}, {2, 3}}), 0, 3).empty());
}

TEST_CASE("naive labels") {
  const auto g = test::path_graph(3);
  const auto order = order_degree(g);
  const auto naive = oracle::build_naive_labels(g, order);
  for (VertexId v = 0; v < 3; ++v) CHECK(naive.label_entries(v) == 3);
  for (VertexId s = 0; s < 3; ++s) {
    for (VertexId t = 0; t < 3; ++t) {
      CHECK(oracle::prefix_query(naive, s, t, 0) == kInfinity);
      CHECK(oracle::prefix_query(naive, s, t, 3) == (s > t ? s - t : t - s));
    }
  }
  // Only the middle vertex (rank 0) is a hub after one search.
  CHECK(oracle::prefix_query(naive, 0, 2, 1) == 2);
  CHECK(oracle::prefix_query(naive, 0, 0, 1) == 2);
}
