#include "pll/variants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pll {

Index build_index_directed(const Graph& g, const VertexOrder& order, bool record_paths,
                           BuildStats* stats) {
  if (!g.directed()) throw std::invalid_argument("build_index_directed needs a directed graph");
  PrunedLabelBuilder builder(g, order, {0, kMaxBitParallelWidth, record_paths});
  builder.run();
  if (stats) *stats = builder.stats();
  return std::move(builder).finish();
}

namespace {

class PrunedDijkstra {
 public:
  PrunedDijkstra(const Graph& g, const VertexOrder& order, bool record_paths)
      : g_(g), order_(order), n_(g.num_vertices()), directed_(g.directed()), paths_(record_paths) {
    init(out_);
    if (directed_) init(in_);
    root_table_.assign(n_ + 1, kInfOf<WeightedDistance>);
    tentative_.assign(n_, kInfinity);
    parent_.assign(n_, kNoParent);
  }

  Index run(BuildStats* stats) {
    BuildStats local;
    for (Rank k = 0; k < n_; ++k) {
      SearchStep s;
      s.rank = k;
      s.root = order_.vertex_at(k);
      s.labeled = search(k, Direction::kForward, s);
      if (directed_) s.labeled += search(k, Direction::kReverse, s);
      local.steps.push_back(s);
    }
    if (stats) *stats = std::move(local);

    WeightedLabelSets sets;
    sets.out = LabelSet<WeightedDistance>::from_lists(out_.ranks, out_.dists,
                                                      paths_ ? &out_.parents : nullptr);
    if (directed_) {
      sets.in = LabelSet<WeightedDistance>::from_lists(in_.ranks, in_.dists,
                                                       paths_ ? &in_.parents : nullptr);
    }
    IndexMetadata meta;
    meta.flags = {directed_, true, paths_};
    meta.bp_roots = 0;
    meta.num_edge_slots = g_.num_edge_slots();
    std::vector<std::uint64_t> ids(g_.external_ids().begin(), g_.external_ids().end());
    return Index(meta, order_, std::move(ids), std::move(sets));
  }

 private:
  struct Lists {
    std::vector<std::vector<Rank>> ranks;
    std::vector<std::vector<WeightedDistance>> dists;
    std::vector<std::vector<VertexId>> parents;
  };
  using HeapItem = std::pair<Distance, VertexId>;

  void init(Lists& lists) const {
    lists.ranks.resize(n_);
    lists.dists.resize(n_);
    if (paths_) lists.parents.resize(n_);
  }

  std::uint32_t search(Rank k, Direction dir, SearchStep& step) {
    const VertexId root = order_.vertex_at(k);
    Lists& root_side = (directed_ && dir == Direction::kReverse) ? in_ : out_;
    Lists& target = (directed_ && dir == Direction::kForward) ? in_ : out_;

    {
      const auto& rr = root_side.ranks[root];
      const auto& rd = root_side.dists[root];
      for (std::size_t i = 0; i < rr.size(); ++i) root_table_[rr[i]] = rd[i];
    }

    touched_.clear();
    heap_.clear();
    tentative_[root] = 0;
    parent_[root] = root;
    touched_.push_back(root);
    heap_.emplace_back(0, root);

    std::uint32_t labeled = 0;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
      const auto [d, u] = heap_.back();
      heap_.pop_back();
      if (d != tentative_[u]) continue;  // stale entry
      ++step.visited;

      auto& ranks = target.ranks[u];
      auto& dists = target.dists[u];
      bool pruned = false;
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        const WeightedDistance via = root_table_[ranks[i]];
        if (via != kInfOf<WeightedDistance> && Distance{via} + Distance{dists[i]} <= d) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;

      if (d >= kInfOf<WeightedDistance>) {
        throw OverflowError("weighted distance from vertex " +
                            std::to_string(g_.external_id(root)) + " exceeds 32 bits");
      }
      ranks.push_back(k);
      dists.push_back(static_cast<WeightedDistance>(d));
      if (paths_) target.parents[u].push_back(parent_[u]);
      ++labeled;

      const auto nbrs = g_.neighbors(u, dir);
      const auto ws = g_.edge_weights(u, dir);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const VertexId w = nbrs[i];
        const Distance nd = d + ws[i];
        if (nd >= tentative_[w]) continue;
        if (tentative_[w] == kInfinity) touched_.push_back(w);
        tentative_[w] = nd;
        parent_[w] = u;
        heap_.emplace_back(nd, w);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
      }
    }

    for (const VertexId v : touched_) tentative_[v] = kInfinity;
    step.resets += static_cast<std::uint32_t>(touched_.size());
    for (const Rank r : root_side.ranks[root]) root_table_[r] = kInfOf<WeightedDistance>;
    return labeled;
  }

  const Graph& g_;
  const VertexOrder& order_;
  std::size_t n_;
  bool directed_;
  bool paths_;
  Lists out_;
  Lists in_;
  std::vector<WeightedDistance> root_table_;
  std::vector<Distance> tentative_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> touched_;
  std::vector<HeapItem> heap_;
};

// Walks parent pointers from `from` up to the hub of rank `hub_rank`,
// starting at label position `pos`. Returns from..hub inclusive.
template <typename D>
std::vector<VertexId> ascend(const LabelSet<D>& labels, const VertexOrder& order, VertexId from,
                             std::size_t pos, Rank hub_rank) {
  const VertexId hub = order.vertex_at(hub_rank);
  std::vector<VertexId> walk{from};
  VertexId cur = from;
  while (cur != hub) {
    const VertexId next = labels[cur].parents[pos];
    if (next == kNoParent || next == cur || walk.size() > labels.num_vertices()) {
      throw std::logic_error("broken parent chain in path labels");
    }
    cur = next;
    walk.push_back(cur);
    pos = find_rank(labels[cur], hub_rank);
    if (pos == static_cast<std::size_t>(-1)) {
      throw std::logic_error("parent lacks an entry for the hub");
    }
  }
  return walk;
}

}  // namespace

Index build_index_weighted(const Graph& g, const VertexOrder& order, bool record_paths,
                           BuildStats* stats) {
  if (!g.weighted()) throw std::invalid_argument("build_index_weighted needs a weighted graph");
  if (order.size() != g.num_vertices()) {
    throw std::invalid_argument("vertex order size does not match graph");
  }
  return PrunedDijkstra(g, order, record_paths).run(stats);
}

std::optional<std::vector<VertexId>> query_path(const Index& index, VertexId s, VertexId t) {
  if (!index.flags().paths) throw std::logic_error("index was built without path labels");
  const std::size_t n = index.num_vertices();
  if (s >= n || t >= n) throw std::out_of_range("query vertex out of range");
  if (s == t) return std::vector<VertexId>{s};
  const bool directed = index.flags().directed;
  return std::visit(
      [&](const auto& sets) -> std::optional<std::vector<VertexId>> {
        const auto& t_side = directed ? sets.in : sets.out;
        const auto m = merge_join(sets.out[s], t_side[t]);
        if (m.distance == kInfinity) return std::nullopt;
        const Rank hub_rank = sets.out[s].ranks[m.pos_a];
        auto path = ascend(sets.out, index.order(), s, m.pos_a, hub_rank);
        const auto back = ascend(t_side, index.order(), t, m.pos_b, hub_rank);
        // `back` runs t..hub; append it reversed without repeating the hub.
        path.insert(path.end(), back.rbegin() + 1, back.rend());
        return path;
      },
      index.labels());
}

}  // namespace pll
