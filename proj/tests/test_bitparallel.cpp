#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "pll/bit_parallel.hpp"
#include "pll/labeling.hpp"
#include "pll/oracle.hpp"
#include "pll/ordering.hpp"
#include "test_support.hpp"

using namespace pll;

namespace {

constexpr NeighborMask bit(int j) { return NeighborMask{1} << j; }

BitParallelEntry entry_of(const BpBfsResult& res, VertexId v) {
  return {0, res.dist[v], res.mask_m1[v], res.mask_0[v]};
}

}  // namespace

TEST_CASE("bp_bfs on small graphs") {
  SUBCASE("path 0-1-2 rooted at the middle") {
    const auto g = test::path_graph(3);
    const std::vector<VertexId> s{0, 2};
    const auto res = bp_bfs(g, 1, s);
    CHECK(res.dist == std::vector<HopDistance>{1, 0, 1});
    CHECK(res.mask_m1 == std::vector<NeighborMask>{bit(0), 0, bit(1)});
    CHECK(res.mask_0 == std::vector<NeighborMask>{0, 0, 0});

    CHECK(bp_query(entry_of(res, 0), entry_of(res, 2)) == 2);
    CHECK(bp_query(entry_of(res, 0), entry_of(res, 0)) == 0);
    CHECK(bp_query(entry_of(res, 0), entry_of(res, 1)) == 1);
  }
  SUBCASE("triangle") {
    const auto g = test::make_graph({{0, 1}, {1, 2}, {0, 2}});
    const std::vector<VertexId> s{1, 2};
    const auto res = bp_bfs(g, 0, s);
    CHECK(res.dist[1] == 1);
    CHECK(res.mask_m1[1] == bit(0));
    CHECK(res.mask_0[1] == bit(1));
    CHECK(res.mask_m1[2] == bit(1));
    CHECK(res.mask_0[2] == bit(0));
  }
  SUBCASE("empty neighbor set is a plain BFS") {
    const auto g = test::random_graph(50, 80, 2);
    const auto res = bp_bfs(g, 0, {});
    const auto row = oracle::sssp(g, 0);
    for (VertexId v = 0; v < 50; ++v) {
      CHECK((row.dist[v] == kInfinity ? res.dist[v] == kInf8 : res.dist[v] == row.dist[v]));
      CHECK(res.mask_m1[v] == 0);
      CHECK(res.mask_0[v] == 0);
    }
  }
  SUBCASE("preconditions") {
    const auto g = test::path_graph(4);
    const std::vector<VertexId> far{3};
    CHECK_THROWS_AS(bp_bfs(g, 0, far), std::invalid_argument);
    const std::vector<VertexId> twice{0, 0};
    CHECK_THROWS_AS(bp_bfs(g, 1, twice), std::invalid_argument);
    const auto d = test::make_graph({{0, 1}}, true);
    CHECK_THROWS_AS(bp_bfs(d, 0, {}), std::invalid_argument);
  }
}

TEST_CASE("bp_query contract") {
  const BitParallelEntry a{3, 2, bit(0), 0}, b{4, 2, bit(0), 0};
  CHECK_THROWS_AS(bp_query(a, b), std::invalid_argument);
  const BitParallelEntry c{3, 3, bit(1), bit(0)};
  CHECK(bp_query(a, c) == 4);  // mask_m1(a) meets mask_0(c)
  const BitParallelEntry d{3, 3, bit(2), 0};
  CHECK(bp_query(a, d) == 5);
  const BitParallelEntry e{3, 3, bit(0) | bit(2), 0};
  CHECK(bp_query(a, e) == 3);
}

TEST_CASE("bp_bfs matches one BFS per member") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = seed % 2 ? test::scale_free(300, 3, seed) : test::random_graph(300, 900, seed);
    const auto roots = select_bp_roots(g, order_degree(g), 4);
    for (const auto& pick : roots) {
      const auto res = bp_bfs(g, pick.root, pick.neighbor_set);
      const auto from_root = oracle::sssp(g, pick.root);
      for (std::size_t j = 0; j < pick.neighbor_set.size(); ++j) {
        const auto from_s = oracle::sssp(g, pick.neighbor_set[j]);
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          if (from_root.dist[v] == kInfinity) {
            CHECK(res.dist[v] == kInf8);
            continue;
          }
          REQUIRE(res.dist[v] == from_root.dist[v]);
          const auto diff = static_cast<long>(from_s.dist[v]) - static_cast<long>(from_root.dist[v]);
          CHECK(((res.mask_m1[v] >> j) & 1) == (diff == -1));
          CHECK(((res.mask_0[v] >> j) & 1) == (diff == 0));
        }
      }
    }
  }
}

TEST_CASE("bp_query equals the minimum over the root and its set") {
  const auto g = test::scale_free(400, 3, 17);
  const auto roots = select_bp_roots(g, order_degree(g), 2);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<VertexId> pick(0, 399);
  for (const auto& r : roots) {
    const auto res = bp_bfs(g, r.root, r.neighbor_set);
    std::vector<oracle::DistanceRow> rows{oracle::sssp(g, r.root)};
    for (const auto s : r.neighbor_set) rows.push_back(oracle::sssp(g, s));
    for (int i = 0; i < 2000; ++i) {
      const VertexId s = pick(rng), t = pick(rng);
      Distance best = kInfinity;
      for (const auto& row : rows) {
        if (row.dist[s] != kInfinity && row.dist[t] != kInfinity) best = std::min(best, row.dist[s] + row.dist[t]);
      }
      CHECK(bp_query(entry_of(res, s), entry_of(res, t)) == best);
    }
  }
}

TEST_CASE("select_bp_roots") {
  const auto star = test::star_graph(4);
  const auto order = order_degree(star);
  CHECK(select_bp_roots(star, order, 0).empty());

  const auto one = select_bp_roots(star, order, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].root == 0);
  CHECK(one[0].neighbor_set == std::vector<VertexId>{1, 2, 3, 4});

  // Full width uses up every vertex in the first pair.
  CHECK(select_bp_roots(star, order, 2).size() == 1);

  const auto narrow = select_bp_roots(star, order, 2, 3);
  REQUIRE(narrow.size() == 2);
  CHECK(narrow[0].neighbor_set == std::vector<VertexId>{1, 2, 3});
  CHECK(narrow[1].root == 4);
  CHECK(narrow[1].neighbor_set.empty());

  CHECK_THROWS_AS(select_bp_roots(star, order, 1, 65), std::invalid_argument);
  CHECK_THROWS_AS(select_bp_roots(star, order, 1, 0), std::invalid_argument);
}

TEST_CASE("hybrid construction") {
  SUBCASE("t=0 is the plain index") {
    const auto g = test::scale_free(300, 2, 3);
    const auto order = order_degree(g);
    CHECK(build_index_hybrid(g, order, 0, 64) == build_index(g, order));
  }
  SUBCASE("star with one root needs only self entries") {
    const auto g = test::star_graph(4);
    BuildStats stats;
    const auto index = build_index_hybrid(g, order_degree(g), 1, 64, &stats);
    CHECK(index.metadata().bp_roots == 1);
    for (VertexId v = 0; v < 5; ++v) {
      CHECK(test::entries(index, v) == test::Entries{{index.order().rank_of(v), 0}});
    }
    CHECK(test::count_mismatches(index, test::all_pairs(g)) == 0);
  }
  SUBCASE("exact for several t") {
    const auto g = test::random_graph(500, 1500, 8);
    const auto truth = test::all_pairs(g);
    for (const std::uint32_t t : {1u, 4u, 16u}) {
      const auto index = build_index_hybrid(g, order_degree(g), t, 64);
      CHECK(index.metadata().bp_roots == t);
      CHECK(test::count_mismatches(index, truth) == 0);
    }
  }
  SUBCASE("narrow width stays exact") {
    const auto g = test::scale_free(300, 3, 5);
    CHECK(test::count_mismatches(build_index_hybrid(g, order_degree(g), 8, 5), test::all_pairs(g)) == 0);
  }
  SUBCASE("t larger than n is clipped") {
    const auto g = test::path_graph(3);
    BuildStats stats;
    const auto index = build_index_hybrid(g, order_degree(g), 10, 64, &stats);
    CHECK(stats.bp_roots_used == 1);
    CHECK(index.metadata().bp_roots == 1);
  }
  SUBCASE("normal labels shrink on a scale-free graph") {
    const auto g = test::scale_free(2000, 3, 12);
    const auto order = order_degree(g);
    CHECK(build_index_hybrid(g, order, 16, 64).total_label_entries() <=
          build_index(g, order).total_label_entries());
  }
  SUBCASE("rejected combinations") {
    const auto d = test::make_graph({{0, 1}}, true);
    CHECK_THROWS(build_index_hybrid(d, VertexOrder::identity(2), 1, 64));
    const auto g = test::path_graph(3);
    CHECK_THROWS(PrunedLabelBuilder(g, order_degree(g), {1, 64, true}));
  }
}
