#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "pll/ordering.hpp"
#include "test_support.hpp"

using namespace pll;

namespace {

std::vector<VertexId> seq(const VertexOrder& o) { return {o.vertices().begin(), o.vertices().end()}; }

bool is_permutation(const VertexOrder& o) {
  for (Rank r = 0; r < o.size(); ++r) {
    if (o.rank_of(o.vertex_at(r)) != r) return false;
  }
  auto v = seq(o);
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != i) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("random order") {
  CHECK(seq(order_random(test::path_graph(1), 3)) == std::vector<VertexId>{0});
  const auto g = test::path_graph(5);
  CHECK(order_random(g, 9) == order_random(g, 9));
  const auto a = order_random(g, 1), b = order_random(g, 2);
  CHECK(is_permutation(a));
  CHECK(is_permutation(b));
  CHECK(a.strategy() == OrderStrategy::kRandom);
}

TEST_CASE("degree order") {
  CHECK(order_degree(test::star_graph(4)).vertex_at(0) == 0);
  CHECK(seq(order_degree(test::cycle_graph(4))) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(order_degree(test::path_graph(3)).vertex_at(0) == 1);

  const auto g = test::scale_free(300, 2, 4);
  const auto o = order_degree(g);
  CHECK(is_permutation(o));
  for (Rank r = 1; r < o.size(); ++r) {
    const auto hi = g.degree(o.vertex_at(r - 1)), lo = g.degree(o.vertex_at(r));
    CHECK(hi >= lo);
    if (hi == lo) CHECK(o.vertex_at(r - 1) < o.vertex_at(r));
  }
}

TEST_CASE("directed degree order sums in and out degree") {
  // 2 has in-degree 2 and out-degree 1; 0 has out-degree 2.
  const auto g = test::make_graph({{0, 1}, {0, 2}, {1, 2}, {2, 3}}, true);
  const auto o = order_degree(g);
  CHECK(o.vertex_at(0) == 2);
  CHECK(o.vertex_at(1) == 0);
}

TEST_CASE("closeness order") {
  const auto star = test::star_graph(4);
  const std::vector<VertexId> everyone{0, 1, 2, 3, 4};
  CHECK(order_closeness(star, everyone).vertex_at(0) == 0);
  CHECK(order_closeness(star, 50, 1).vertex_at(0) == 0);
  CHECK(seq(order_closeness(test::path_graph(1), 5, 1)) == std::vector<VertexId>{0});

  const std::vector<VertexId> ends{0, 2};
  CHECK(seq(order_closeness(test::path_graph(3), ends)) == std::vector<VertexId>{0, 1, 2});

  // Unreachable samples count as n, so the isolated vertex goes last.
  const auto g = test::make_graph({{0, 1}, {1, 2}, {3, 3}});
  const std::vector<VertexId> all{0, 1, 2, 3};
  const auto o = order_closeness(g, all);
  CHECK(o.vertex_at(0) == 1);
  CHECK(o.vertex_at(3) == 3);

  const auto big = test::random_graph(200, 600, 3);
  CHECK(is_permutation(order_closeness(big, 50, 7)));
  CHECK(order_closeness(big, 50, 7) == order_closeness(big, 50, 7));
}

TEST_CASE("from_sequence validates") {
  CHECK_THROWS_AS(VertexOrder::from_sequence({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexOrder::from_sequence({0, 3}), std::invalid_argument);
  const auto o = VertexOrder::from_sequence({2, 0, 1});
  CHECK(o.rank_of(2) == 0);
  CHECK(o.rank_of(1) == 2);
}

TEST_CASE("strategy names") {
  CHECK(parse_order_strategy("closeness") == OrderStrategy::kCloseness);
  CHECK(to_string(OrderStrategy::kDegree) == "degree");
  CHECK_THROWS(parse_order_strategy("betweenness"));
}
