#include "pll/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <tuple>

namespace pll {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct DenseEdge {
  VertexId from;
  VertexId to;
  Weight weight;
};

// Builds CSR arrays from (from, to, weight) triples already sorted by (from, to).
void fill_csr(std::size_t n, const std::vector<DenseEdge>& edges, bool weighted,
              std::vector<std::size_t>& offsets, std::vector<VertexId>& targets,
              std::vector<Weight>& weights) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[e.from + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(edges.size());
  if (weighted) weights.resize(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    targets[i] = edges[i].to;
    if (weighted) weights[i] = edges[i].weight;
  }
}

// Sorts by (from, to, weight) and keeps the first, i.e. lightest, copy of each arc.
void sort_unique(std::vector<DenseEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const DenseEdge& a, const DenseEdge& b) {
    return std::tie(a.from, a.to, a.weight) < std::tie(b.from, b.to, b.weight);
  });
  auto last = std::unique(edges.begin(), edges.end(), [](const DenseEdge& a, const DenseEdge& b) {
    return a.from == b.from && a.to == b.to;
  });
  edges.erase(last, edges.end());
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) fields.push_back(s.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
T parse_unsigned(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph Graph::from_edges(std::span<const Edge> edges, bool directed, bool weighted) {
  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;

  g.external_ids_.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    g.external_ids_.push_back(e.from);
    g.external_ids_.push_back(e.to);
  }
  std::sort(g.external_ids_.begin(), g.external_ids_.end());
  g.external_ids_.erase(std::unique(g.external_ids_.begin(), g.external_ids_.end()),
                        g.external_ids_.end());
  if (g.external_ids_.size() > std::numeric_limits<VertexId>::max()) {
    throw DomainError("too many vertices for 32-bit vertex ids");
  }
  const std::size_t n = g.external_ids_.size();

  std::vector<DenseEdge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& e : edges) {
    if (e.from == e.to) continue;
    const auto u = *g.find_vertex(e.from);
    const auto v = *g.find_vertex(e.to);
    const Weight w = weighted ? e.weight : 1;
    arcs.push_back({u, v, w});
    if (!directed) arcs.push_back({v, u, w});
  }
  // Both directions of an undirected edge are inserted together, so the
  // surviving minimum weight is the same on each side.
  sort_unique(arcs);
  fill_csr(n, arcs, weighted, g.fwd_offsets_, g.fwd_targets_, g.fwd_weights_);

  if (directed) {
    for (auto& a : arcs) std::swap(a.from, a.to);
    sort_unique(arcs);
    fill_csr(n, arcs, weighted, g.rev_offsets_, g.rev_targets_, g.rev_weights_);
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(num_vertices()) + ")");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v, Direction dir) const {
  check_vertex(v);
  if (dir == Direction::kReverse && directed_) {
    return std::span(rev_targets_).subspan(rev_offsets_[v], rev_offsets_[v + 1] - rev_offsets_[v]);
  }
  return std::span(fwd_targets_).subspan(fwd_offsets_[v], fwd_offsets_[v + 1] - fwd_offsets_[v]);
}

std::span<const Weight> Graph::edge_weights(VertexId v, Direction dir) const {
  check_vertex(v);
  if (!weighted_) return {};
  if (dir == Direction::kReverse && directed_) {
    return std::span(rev_weights_).subspan(rev_offsets_[v], rev_offsets_[v + 1] - rev_offsets_[v]);
  }
  return std::span(fwd_weights_).subspan(fwd_offsets_[v], fwd_offsets_[v + 1] - fwd_offsets_[v]);
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  std::size_t d = fwd_offsets_[v + 1] - fwd_offsets_[v];
  if (directed_) d += rev_offsets_[v + 1] - rev_offsets_[v];
  return d;
}

std::uint64_t Graph::external_id(VertexId v) const {
  check_vertex(v);
  return external_ids_[v];
}

std::optional<VertexId> Graph::find_vertex(std::uint64_t external) const {
  auto it = std::lower_bound(external_ids_.begin(), external_ids_.end(), external);
  if (it == external_ids_.end() || *it != external) return std::nullopt;
  return static_cast<VertexId>(it - external_ids_.begin());
}

Graph load_edge_list(std::istream& in, bool directed, bool weighted) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    const std::size_t expected = weighted ? 3 : 2;
    if (fields.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    Edge e;
    e.from = parse_unsigned<std::uint64_t>(fields[0], line_no, "vertex id");
    e.to = parse_unsigned<std::uint64_t>(fields[1], line_no, "vertex id");
    if (weighted) {
      if (fields[2].front() == '-') {
        throw DomainError("line " + std::to_string(line_no) + ": negative weight " +
                          std::string(fields[2]));
      }
      e.weight = parse_unsigned<Weight>(fields[2], line_no, "weight");
    }
    edges.push_back(e);
  }
  if (in.bad()) throw std::runtime_error("read error while loading edge list");
  return Graph::from_edges(edges, directed, weighted);
}

Graph load_edge_list_file(const std::filesystem::path& path, bool directed, bool weighted) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  return load_edge_list(in, directed, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  out << "# vertices " << n << " slots " << g.num_edge_slots()
      << (g.directed() ? " directed" : " undirected") << '\n';
  for (VertexId u = 0; u < n; ++u) {
    const auto ext_u = g.external_id(u);
    if (g.degree(u) == 0) {
      out << ext_u << ' ' << ext_u;
      if (g.weighted()) out << " 0";
      out << '\n';
      continue;
    }
    const auto nbrs = g.neighbors(u);
    const auto ws = g.edge_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!g.directed() && nbrs[i] < u) continue;
      out << ext_u << ' ' << g.external_id(nbrs[i]);
      if (g.weighted()) out << ' ' << ws[i];
      out << '\n';
    }
  }
}

}  // namespace pll
