#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pll/types.hpp"

namespace pll {

// An edge over external (file) vertex ids.
struct Edge {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  Weight weight = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Immutable compressed adjacency structure over dense ids 0..n-1.
///
/// External ids are remapped to dense ids in ascending order, so dense id i is
/// the i-th smallest external id. Neighbor lists are sorted and free of
/// duplicates and self-loops. Undirected graphs store each edge in both
/// lists; directed graphs additionally keep reverse lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from external-id edges. Self-loops are dropped but still
  /// register their endpoint as a vertex; parallel edges collapse to the
  /// lightest one.
  static Graph from_edges(std::span<const Edge> edges, bool directed, bool weighted);

  std::size_t num_vertices() const { return external_ids_.size(); }
  // Number of directed adjacency slots (twice the edge count when undirected).
  std::size_t num_edge_slots() const { return fwd_targets_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  std::span<const VertexId> neighbors(VertexId v, Direction dir = Direction::kForward) const;
  // Empty for unweighted graphs.
  std::span<const Weight> edge_weights(VertexId v, Direction dir = Direction::kForward) const;

  // out-degree + in-degree for directed graphs.
  std::size_t degree(VertexId v) const;

  std::uint64_t external_id(VertexId v) const;
  std::span<const std::uint64_t> external_ids() const { return external_ids_; }
  std::optional<VertexId> find_vertex(std::uint64_t external) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(VertexId v) const;

  bool directed_ = false;
  bool weighted_ = false;
  std::vector<std::uint64_t> external_ids_;
  std::vector<std::size_t> fwd_offsets_{0};
  std::vector<VertexId> fwd_targets_;
  std::vector<Weight> fwd_weights_;
  std::vector<std::size_t> rev_offsets_;
  std::vector<VertexId> rev_targets_;
  std::vector<Weight> rev_weights_;
};

/// Parses a SNAP-style edge list: "u v" or "u v w" per line, '#' comments,
/// blank lines and any run of spaces/tabs tolerated.
Graph load_edge_list(std::istream& in, bool directed, bool weighted);
Graph load_edge_list_file(const std::filesystem::path& path, bool directed, bool weighted);

/// Writes the graph back as an edge list over external ids. Isolated vertices
/// are written as self-loops so that reloading reproduces the vertex set.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace pll
