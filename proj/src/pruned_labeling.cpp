#include <stdexcept>
#include <utility>

#include "pll/labeling.hpp"
#include "pll/variants.hpp"

namespace pll {

PrunedLabelBuilder::PrunedLabelBuilder(const Graph& g, VertexOrder order, BuildOptions options)
    : g_(&g), order_(std::move(order)), options_(options), n_(g.num_vertices()),
      directed_(g.directed()) {
  if (g.weighted()) throw std::invalid_argument("pruned BFS needs an unweighted graph");
  if (order_.size() != n_) throw std::invalid_argument("vertex order size does not match graph");
  if (options_.bp_roots > 0 && directed_) {
    throw std::invalid_argument("bit-parallel labels are not supported for directed graphs");
  }
  if (options_.bp_roots > 0 && options_.record_paths) {
    throw std::invalid_argument("path labels cannot be combined with bit-parallel labels");
  }

  const auto init_lists = [&](Lists& lists) {
    lists.ranks.resize(n_);
    lists.dists.resize(n_);
    if (options_.record_paths) lists.parents.resize(n_);
  };
  init_lists(out_);
  if (directed_) init_lists(in_);

  tentative_.assign(n_, kInf8);
  root_table_.assign(n_ + 1, kInf8);
  queue_.resize(n_);
  if (options_.record_paths) parent_.assign(n_, kNoParent);

  stats_.bp_roots_requested = options_.bp_roots;
  if (options_.bp_roots > 0) build_bit_parallel();
}

void PrunedLabelBuilder::build_bit_parallel() {
  bp_roots_ = select_bp_roots(*g_, order_, options_.bp_roots, options_.bp_width);
  bp_count_ = bp_roots_.size();
  stats_.bp_roots_used = static_cast<std::uint32_t>(bp_count_);
  bp_dist_.assign(n_ * bp_count_, kInf8);
  bp_m1_.assign(n_ * bp_count_, 0);
  bp_m0_.assign(n_ * bp_count_, 0);
  bp_root_ranks_.resize(bp_count_);
  for (std::size_t i = 0; i < bp_count_; ++i) {
    const auto& pick = bp_roots_[i];
    bp_root_ranks_[i] = order_.rank_of(pick.root);
    const auto res = bp_bfs(*g_, pick.root, pick.neighbor_set);
    for (std::size_t v = 0; v < n_; ++v) {
      bp_dist_[v * bp_count_ + i] = res.dist[v];
      bp_m1_[v * bp_count_ + i] = res.mask_m1[v];
      bp_m0_[v * bp_count_ + i] = res.mask_0[v];
    }
  }
}

bool PrunedLabelBuilder::bp_prunes(VertexId root, VertexId u, HopDistance d) const {
  const std::size_t rb = std::size_t{root} * bp_count_;
  const std::size_t ub = std::size_t{u} * bp_count_;
  for (std::size_t i = 0; i < bp_count_; ++i) {
    const HopDistance dr = bp_dist_[rb + i];
    const HopDistance du = bp_dist_[ub + i];
    if (dr == kInf8 || du == kInf8) continue;
    int td = int{dr} + int{du};
    if (td - 2 > d) continue;
    if (bp_m1_[rb + i] & bp_m1_[ub + i]) {
      td -= 2;
    } else if ((bp_m0_[rb + i] & bp_m1_[ub + i]) | (bp_m1_[rb + i] & bp_m0_[ub + i])) {
      td -= 1;
    }
    if (td <= d) return true;
  }
  return false;
}

std::uint32_t PrunedLabelBuilder::pruned_bfs(Rank k, Direction dir, std::uint32_t& visited,
                                             std::uint32_t& resets) {
  const VertexId root = order_.vertex_at(k);
  // Forward searches certify root -> u, so the root contributes its out-label
  // and u receives an in-label entry; reverse searches swap the roles.
  Lists& root_side = (directed_ && dir == Direction::kReverse) ? in_ : out_;
  Lists& target = directed_ && dir == Direction::kForward ? in_ : out_;
  const bool paths = options_.record_paths;

  {
    const auto& rr = root_side.ranks[root];
    const auto& rd = root_side.dists[root];
    for (std::size_t i = 0; i < rr.size(); ++i) root_table_[rr[i]] = rd[i];
  }

  std::size_t head = 0, tail = 0;
  queue_[tail++] = root;
  tentative_[root] = 0;
  if (paths) parent_[root] = root;

  std::uint32_t labeled = 0;
  while (head < tail) {
    const VertexId u = queue_[head++];
    const HopDistance d = tentative_[u];

    if (bp_count_ > 0 && u != root && bp_prunes(root, u, d)) continue;

    auto& ranks = target.ranks[u];
    auto& dists = target.dists[u];
    bool pruned = false;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (int{root_table_[ranks[i]]} + int{dists[i]} <= int{d}) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;

    ranks.push_back(k);
    dists.push_back(d);
    if (paths) target.parents[u].push_back(parent_[u]);
    ++labeled;

    for (const VertexId w : g_->neighbors(u, dir)) {
      if (tentative_[w] != kInf8) continue;
      if (d + 1 >= kInf8) {
        throw OverflowError("hop distance from vertex " + std::to_string(g_->external_id(root)) +
                            " exceeds 254");
      }
      tentative_[w] = static_cast<HopDistance>(d + 1);
      if (paths) parent_[w] = u;
      queue_[tail++] = w;
    }
  }

  visited += static_cast<std::uint32_t>(head);
  for (std::size_t i = 0; i < tail; ++i) tentative_[queue_[i]] = kInf8;
  resets += static_cast<std::uint32_t>(tail);
  for (const Rank r : root_side.ranks[root]) root_table_[r] = kInf8;
  return labeled;
}

SearchStep PrunedLabelBuilder::step() {
  if (done()) throw std::logic_error("all roots already processed");
  SearchStep s;
  s.rank = next_;
  s.root = order_.vertex_at(next_);
  s.labeled = pruned_bfs(next_, Direction::kForward, s.visited, s.resets);
  if (directed_) s.labeled += pruned_bfs(next_, Direction::kReverse, s.visited, s.resets);
  ++next_;
  stats_.steps.push_back(s);
  return s;
}

void PrunedLabelBuilder::run() {
  while (!done()) step();
}

Distance PrunedLabelBuilder::query(VertexId s, VertexId t) const {
  if (s >= n_ || t >= n_) throw std::out_of_range("query vertex out of range");
  Distance best = kInfinity;
  if (bp_count_ > 0) {
    for (std::size_t i = 0; i < bp_count_; ++i) {
      const std::size_t a = std::size_t{s} * bp_count_ + i;
      const std::size_t b = std::size_t{t} * bp_count_ + i;
      if (bp_dist_[a] == kInf8 || bp_dist_[b] == kInf8) continue;
      const BitParallelEntry es{bp_root_ranks_[i], bp_dist_[a], bp_m1_[a], bp_m0_[a]};
      const BitParallelEntry et{bp_root_ranks_[i], bp_dist_[b], bp_m1_[b], bp_m0_[b]};
      best = std::min(best, detail::bp_query_unchecked(es, et));
    }
  }
  const Lists& tl = directed_ ? in_ : out_;
  const auto& ra = out_.ranks[s];
  const auto& da = out_.dists[s];
  const auto& rb = tl.ranks[t];
  const auto& db = tl.dists[t];
  std::size_t i = 0, j = 0;
  while (i < ra.size() && j < rb.size()) {
    if (ra[i] == rb[j]) {
      best = std::min(best, Distance{da[i]} + Distance{db[j]});
      ++i;
      ++j;
    } else if (ra[i] < rb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

std::span<const Rank> PrunedLabelBuilder::label_ranks(VertexId v, bool in) const {
  return (in && directed_ ? in_ : out_).ranks.at(v);
}

std::span<const HopDistance> PrunedLabelBuilder::label_dists(VertexId v, bool in) const {
  return (in && directed_ ? in_ : out_).dists.at(v);
}

Index PrunedLabelBuilder::finish() && {
  if (!done()) throw std::logic_error("construction has not processed every root");
  const bool paths = options_.record_paths;
  HopLabelSets sets;
  sets.out = LabelSet<HopDistance>::from_lists(out_.ranks, out_.dists, paths ? &out_.parents : nullptr);
  if (directed_) {
    sets.in = LabelSet<HopDistance>::from_lists(in_.ranks, in_.dists, paths ? &in_.parents : nullptr);
  }
  if (bp_count_ > 0) {
    std::vector<std::size_t> offsets(n_ + 1, 0);
    std::vector<BitParallelEntry> entries;
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t i = 0; i < bp_count_; ++i) {
        const std::size_t at = v * bp_count_ + i;
        if (bp_dist_[at] == kInf8) continue;
        entries.push_back({bp_root_ranks_[i], bp_dist_[at], bp_m1_[at], bp_m0_[at]});
      }
      offsets[v + 1] = entries.size();
    }
    sets.bit_parallel = BitParallelLabels::from_arrays(std::move(offsets), std::move(entries));
  }

  IndexMetadata meta;
  meta.flags = {directed_, false, paths};
  meta.bp_width = options_.bp_width;
  meta.bp_roots = static_cast<std::uint32_t>(bp_count_);
  meta.num_edge_slots = g_->num_edge_slots();
  std::vector<std::uint64_t> ids(g_->external_ids().begin(), g_->external_ids().end());
  return Index(meta, std::move(order_), std::move(ids), std::move(sets));
}

Index build_index(const Graph& g, const VertexOrder& order, BuildStats* stats) {
  if (g.directed()) throw std::invalid_argument("build_index needs an undirected graph");
  PrunedLabelBuilder builder(g, order);
  builder.run();
  if (stats) *stats = builder.stats();
  return std::move(builder).finish();
}

Index build_index_hybrid(const Graph& g, const VertexOrder& order, std::uint32_t bp_roots,
                         std::uint32_t bp_width, BuildStats* stats) {
  if (g.directed()) throw std::invalid_argument("build_index_hybrid needs an undirected graph");
  PrunedLabelBuilder builder(g, order, {bp_roots, bp_width, false});
  builder.run();
  if (stats) *stats = builder.stats();
  return std::move(builder).finish();
}

Index build(const Graph& g, const VertexOrder& order, const BuildOptions& options,
            BuildStats* stats) {
  if (g.weighted()) {
    if (options.bp_roots > 0) {
      throw std::invalid_argument("bit-parallel labels are not supported for weighted graphs");
    }
    return build_index_weighted(g, order, options.record_paths, stats);
  }
  PrunedLabelBuilder builder(g, order, options);
  builder.run();
  if (stats) *stats = builder.stats();
  return std::move(builder).finish();
}

}  // namespace pll
