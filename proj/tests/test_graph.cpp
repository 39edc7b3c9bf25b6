#include <sstream>
#include <vector>

#include "doctest.h"
#include "pll/graph.hpp"
#include "test_support.hpp"

using namespace pll;

namespace {

Graph parse(const std::string& text, bool directed = false, bool weighted = false) {
  std::istringstream in(text);
  return load_edge_list(in, directed, weighted);
}

std::vector<VertexId> nbrs(const Graph& g, VertexId v, Direction dir = Direction::kForward) {
  const auto s = g.neighbors(v, dir);
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("path of length two") {
  const auto g = parse("0 1\n1 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(nbrs(g, 1) == std::vector<VertexId>{0, 2});
  CHECK(g.num_edge_slots() == 4);
}

TEST_CASE("duplicates and self-loops are dropped") {
  const auto g = parse("5 9\n9 5\n5 5\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edge_slots() == 2);
  CHECK(g.external_id(0) == 5);
  CHECK(g.external_id(1) == 9);
  CHECK(nbrs(g, 0) == std::vector<VertexId>{1});
  CHECK(g.find_vertex(9) == VertexId{1});
  CHECK_FALSE(g.find_vertex(7).has_value());
}

TEST_CASE("directed 3-cycle keeps forward and reverse lists") {
  const auto g = parse("0 1\n1 2\n2 0\n", true);
  CHECK(nbrs(g, 0) == std::vector<VertexId>{1});
  CHECK(nbrs(g, 0, Direction::kReverse) == std::vector<VertexId>{2});
  CHECK(g.num_edge_slots() == 3);
  CHECK(g.degree(0) == 2);
}

TEST_CASE("neighbors") {
  SUBCASE("star center") {
    const auto g = test::star_graph(4);
    CHECK(nbrs(g, 0) == std::vector<VertexId>{1, 2, 3, 4});
  }
  SUBCASE("isolated vertex") {
    const auto g = parse("0 1\n2 2\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.neighbors(2).empty());
  }
  SUBCASE("directed reverse") {
    const auto g = parse("0 1\n", true);
    CHECK(g.neighbors(0, Direction::kReverse).empty());
    CHECK(nbrs(g, 1, Direction::kReverse) == std::vector<VertexId>{0});
  }
  SUBCASE("undirected reverse equals forward") {
    const auto g = parse("0 1\n1 2\n");
    CHECK(nbrs(g, 1, Direction::kReverse) == nbrs(g, 1));
  }
  SUBCASE("out of range") {
    const auto g = test::path_graph(3);
    CHECK_THROWS_AS(g.neighbors(3), std::out_of_range);
  }
}

TEST_CASE("parser tolerance and errors") {
  SUBCASE("comments, blank lines, tabs, trailing whitespace") {
    const auto g = parse("# header\n\n0\t 1  \n  1 2\t\n\n");
    CHECK(g.num_vertices() == 3);
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse("0 1\n# c\n1 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("wrong field count") {
    CHECK_THROWS_AS(parse("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("0\n"), ParseError);
    CHECK_THROWS_AS(parse("0 1\n", false, true), ParseError);
  }
  SUBCASE("negative id is malformed") { CHECK_THROWS_AS(parse("-1 2\n"), ParseError); }
  SUBCASE("negative weight") { CHECK_THROWS_AS(parse("0 1 -3\n", false, true), DomainError); }
  SUBCASE("zero weight allowed") {
    const auto g = parse("0 1 0\n", false, true);
    CHECK(g.edge_weights(0)[0] == 0);
  }
}

TEST_CASE("duplicate weighted edges keep the lighter weight") {
  const auto g = parse("0 1 5\n1 0 2\n", false, true);
  CHECK(g.edge_weights(0)[0] == 2);
  CHECK(g.edge_weights(1)[0] == 2);
}

TEST_CASE("invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const bool directed : {false, true}) {
      const auto g = test::random_graph(60, 150, seed, directed);
      std::size_t slots = 0;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto ns = g.neighbors(v);
        slots += ns.size();
        for (std::size_t i = 0; i < ns.size(); ++i) {
          CHECK(ns[i] != v);
          if (i > 0) CHECK(ns[i - 1] < ns[i]);
          const auto back = g.neighbors(ns[i], Direction::kReverse);
          CHECK(std::binary_search(back.begin(), back.end(), v));
        }
      }
      CHECK(slots == g.num_edge_slots());
    }
  }
}

TEST_CASE("export and reload round-trips") {
  for (const bool directed : {false, true}) {
    for (const bool weighted : {false, true}) {
      auto edges = gen::erdos_renyi(40, 70, 11, directed);
      if (weighted) gen::assign_weights(edges, 0, 9, 5);
      // Sparse external ids and an isolated vertex.
      for (auto& e : edges) {
        e.from = e.from * 17 + 3;
        e.to = e.to * 17 + 3;
      }
      edges.push_back({1000, 1000, 0});
      const auto g = Graph::from_edges(edges, directed, weighted);
      std::ostringstream out;
      write_edge_list(out, g);
      CHECK(parse(out.str(), directed, weighted) == g);
    }
  }
}
