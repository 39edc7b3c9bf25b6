#include "pll/index_store.hpp"

#include <algorithm>
#include <cstring>
#include <iterator>
#include <istream>
#include <ostream>
#include <string>

namespace pll {

namespace {

using index_file::kBpEntrySize;
using index_file::kHeaderSize;

class Writer {
 public:
  template <typename T>
  void put(T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bytes_.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i)));
    }
  }

  template <typename T>
  void patch(std::size_t pos, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bytes_[pos + i] = static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * i));
    }
  }

  void zeros(std::size_t count) { bytes_.resize(bytes_.size() + count, 0); }
  std::size_t size() const { return bytes_.size(); }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

template <typename T>
T read_le(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{p[i]} << (8 * i);
  return static_cast<T>(v);
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void seek(std::uint64_t pos) {
    if (pos > bytes_.size()) throw CorruptionError("section offset beyond end of file");
    pos_ = pos;
  }
  std::size_t pos() const { return pos_; }

  template <typename T>
  T get() {
    need(sizeof(T));
    const T v = read_le<T>(bytes_.data() + pos_);
    pos_ += sizeof(T);
    return v;
  }

 private:
  void need(std::size_t count) const {
    if (pos_ + count > bytes_.size()) throw CorruptionError("index file is truncated");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

// Writes an offsets table placeholder and returns its position.
std::size_t begin_table(Writer& w, std::size_t n) {
  const std::size_t at = w.size();
  w.zeros((n + 1) * 8);
  return at;
}

template <typename D>
void write_labels(Writer& w, const LabelSet<D>& labels) {
  const std::size_t n = labels.num_vertices();
  const std::size_t section = w.size();
  const std::size_t table = begin_table(w, n);
  const auto offsets = labels.offsets();
  for (std::size_t v = 0; v < n; ++v) {
    w.patch<std::uint64_t>(table + 8 * v, w.size() - section);
    const std::size_t begin = offsets[v], end = offsets[v + 1];
    w.put<std::uint32_t>(static_cast<std::uint32_t>(end - begin));
    for (std::size_t i = begin; i < end; ++i) w.put<std::uint32_t>(labels.ranks()[i]);
    for (std::size_t i = begin; i < end; ++i) w.put<D>(labels.dists()[i]);
  }
  w.patch<std::uint64_t>(table + 8 * n, w.size() - section);
}

template <typename D>
void write_parents(Writer& w, const LabelSet<D>& labels) {
  const std::size_t n = labels.num_vertices();
  const std::size_t section = w.size();
  const std::size_t table = begin_table(w, n);
  const auto offsets = labels.offsets();
  for (std::size_t v = 0; v < n; ++v) {
    w.patch<std::uint64_t>(table + 8 * v, w.size() - section);
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) w.put<std::uint32_t>(labels.parents()[i]);
  }
  w.patch<std::uint64_t>(table + 8 * n, w.size() - section);
}

void write_bit_parallel(Writer& w, const BitParallelLabels& bp, std::size_t n) {
  const std::size_t section = w.size();
  const std::size_t table = begin_table(w, n);
  for (std::size_t v = 0; v < n; ++v) {
    w.patch<std::uint64_t>(table + 8 * v, w.size() - section);
    const auto entries = bp.empty() ? std::span<const BitParallelEntry>{} : bp[static_cast<VertexId>(v)];
    w.put<std::uint32_t>(static_cast<std::uint32_t>(entries.size()));
    for (const auto& e : entries) {
      w.put<std::uint32_t>(e.root_rank);
      w.put<std::uint8_t>(e.dist);
      w.put<std::uint64_t>(e.mask_m1);
      w.put<std::uint64_t>(e.mask_0);
    }
  }
  w.patch<std::uint64_t>(table + 8 * n, w.size() - section);
}

std::vector<std::uint64_t> read_table(Reader& r, std::uint64_t section, std::size_t n) {
  r.seek(section);
  std::vector<std::uint64_t> table(n + 1);
  for (auto& x : table) x = r.get<std::uint64_t>();
  for (std::size_t v = 0; v < n; ++v) {
    if (table[v + 1] < table[v]) throw CorruptionError("per-vertex offsets are not monotone");
  }
  if (table[0] != (n + 1) * 8) throw CorruptionError("first record does not follow offset table");
  return table;
}

template <typename D>
LabelSet<D> read_labels(Reader& r, std::uint64_t section, std::size_t n,
                        std::uint64_t parent_section) {
  const auto table = read_table(r, section, n);
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Rank> ranks;
  std::vector<D> dists;
  for (std::size_t v = 0; v < n; ++v) {
    r.seek(section + table[v]);
    const auto count = r.get<std::uint32_t>();
    if (table[v + 1] - table[v] != 4 + std::uint64_t{count} * (4 + sizeof(D))) {
      throw CorruptionError("label record size disagrees with offset table");
    }
    for (std::uint32_t i = 0; i < count; ++i) ranks.push_back(r.get<std::uint32_t>());
    for (std::uint32_t i = 0; i < count; ++i) dists.push_back(r.get<D>());
    offsets[v + 1] = offsets[v] + count;
  }
  std::vector<VertexId> parents;
  if (parent_section != 0) {
    const auto ptable = read_table(r, parent_section, n);
    parents.reserve(ranks.size());
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t count = offsets[v + 1] - offsets[v];
      if (ptable[v + 1] - ptable[v] != 4 * count) {
        throw CorruptionError("parent record size disagrees with label record");
      }
      r.seek(parent_section + ptable[v]);
      for (std::size_t i = 0; i < count; ++i) parents.push_back(r.get<std::uint32_t>());
    }
  }
  try {
    return LabelSet<D>::from_arrays(std::move(offsets), std::move(ranks), std::move(dists),
                                    std::move(parents));
  } catch (const std::invalid_argument& e) {
    throw CorruptionError(std::string("invalid label section: ") + e.what());
  }
}

BitParallelLabels read_bit_parallel(Reader& r, std::uint64_t section, std::size_t n) {
  const auto table = read_table(r, section, n);
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<BitParallelEntry> entries;
  for (std::size_t v = 0; v < n; ++v) {
    r.seek(section + table[v]);
    const auto count = r.get<std::uint32_t>();
    if (table[v + 1] - table[v] != 4 + std::uint64_t{count} * kBpEntrySize) {
      throw CorruptionError("bit-parallel record size disagrees with offset table");
    }
    for (std::uint32_t i = 0; i < count; ++i) {
      BitParallelEntry e;
      e.root_rank = r.get<std::uint32_t>();
      e.dist = r.get<std::uint8_t>();
      e.mask_m1 = r.get<std::uint64_t>();
      e.mask_0 = r.get<std::uint64_t>();
      entries.push_back(e);
    }
    offsets[v + 1] = entries.size();
  }
  if (entries.empty()) return {};
  try {
    return BitParallelLabels::from_arrays(std::move(offsets), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw CorruptionError(std::string("invalid bit-parallel section: ") + e.what());
  }
}

struct Header {
  std::uint8_t flags = 0;
  std::uint8_t bp_width = 0;
  std::uint32_t bp_roots = 0;
  std::uint8_t strategy = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t order = 0;
  std::uint64_t bp = 0;
  std::uint64_t out = 0;
  std::uint64_t in = 0;
  std::uint64_t parents = 0;
  std::uint64_t file_size = 0;
};

Header parse_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < index_file::kMagic.size() ||
      !std::equal(index_file::kMagic.begin(), index_file::kMagic.end(), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; })) {
    throw FormatError("not a PLL index file (bad magic)");
  }
  if (bytes.size() < kHeaderSize) throw CorruptionError("index file header is truncated");
  const auto version = read_le<std::uint16_t>(bytes.data() + 4);
  if (version != index_file::kVersion) {
    throw FormatError("unsupported index file version " + std::to_string(version));
  }
  Header h;
  h.flags = bytes[6];
  h.bp_width = bytes[7];
  h.bp_roots = read_le<std::uint32_t>(bytes.data() + 8);
  h.strategy = bytes[12];
  h.n = read_le<std::uint64_t>(bytes.data() + 16);
  h.m = read_le<std::uint64_t>(bytes.data() + 24);
  h.order = read_le<std::uint64_t>(bytes.data() + 32);
  h.bp = read_le<std::uint64_t>(bytes.data() + 40);
  h.out = read_le<std::uint64_t>(bytes.data() + 48);
  h.in = read_le<std::uint64_t>(bytes.data() + 56);
  h.parents = read_le<std::uint64_t>(bytes.data() + 64);
  h.file_size = read_le<std::uint64_t>(bytes.data() + 72);
  if ((h.flags & ~std::uint8_t{7}) != 0 || h.strategy > 3) {
    throw FormatError("unknown flags in index header");
  }
  if (h.n > std::numeric_limits<VertexId>::max()) throw CorruptionError("vertex count too large");
  return h;
}

template <typename D>
std::vector<std::uint8_t> serialize_sets(const Index& index, const LabelSets<D>& sets) {
  const std::size_t n = index.num_vertices();
  const auto& meta = index.metadata();
  Writer w;
  w.zeros(kHeaderSize);

  const std::size_t order_off = w.size();
  for (const VertexId v : index.order().vertices()) w.put<std::uint32_t>(v);
  for (const std::uint64_t id : index.external_ids()) w.put<std::uint64_t>(id);

  const std::size_t bp_off = w.size();
  write_bit_parallel(w, sets.bit_parallel, n);

  const std::size_t out_off = w.size();
  write_labels(w, sets.out);
  std::size_t in_off = 0;
  if (meta.flags.directed) {
    in_off = w.size();
    write_labels(w, sets.in);
  }
  std::size_t parent_off = 0;
  if (meta.flags.paths) {
    parent_off = w.size();
    write_parents(w, sets.out);
    if (meta.flags.directed) write_parents(w, sets.in);
  }

  std::uint8_t flags = 0;
  if (meta.flags.directed) flags |= index_file::kFlagDirected;
  if (meta.flags.weighted) flags |= index_file::kFlagWeighted;
  if (meta.flags.paths) flags |= index_file::kFlagPaths;
  for (std::size_t i = 0; i < 4; ++i) w.patch<std::uint8_t>(i, static_cast<std::uint8_t>(index_file::kMagic[i]));
  w.patch<std::uint16_t>(4, index_file::kVersion);
  w.patch<std::uint8_t>(6, flags);
  w.patch<std::uint8_t>(7, static_cast<std::uint8_t>(meta.bp_width));
  w.patch<std::uint32_t>(8, meta.bp_roots);
  w.patch<std::uint8_t>(12, static_cast<std::uint8_t>(index.order().strategy()));
  w.patch<std::uint64_t>(16, n);
  w.patch<std::uint64_t>(24, meta.num_edge_slots);
  w.patch<std::uint64_t>(32, order_off);
  w.patch<std::uint64_t>(40, bp_off);
  w.patch<std::uint64_t>(48, out_off);
  w.patch<std::uint64_t>(56, in_off);
  w.patch<std::uint64_t>(64, parent_off);
  w.patch<std::uint64_t>(72, w.size());
  return std::move(w).take();
}

template <typename D>
Index deserialize_sets(std::span<const std::uint8_t> bytes, const Header& h) {
  const std::size_t n = h.n;
  const bool directed = (h.flags & index_file::kFlagDirected) != 0;
  const bool paths = (h.flags & index_file::kFlagPaths) != 0;
  Reader r(bytes);

  r.seek(h.order);
  std::vector<VertexId> vertex_at(n);
  for (auto& v : vertex_at) v = r.get<std::uint32_t>();
  std::vector<std::uint64_t> ids(n);
  for (auto& id : ids) id = r.get<std::uint64_t>();
  VertexOrder order;
  try {
    order = VertexOrder::from_sequence(std::move(vertex_at), static_cast<OrderStrategy>(h.strategy));
  } catch (const std::invalid_argument&) {
    throw CorruptionError("order section is not a permutation");
  }

  LabelSets<D> sets;
  sets.bit_parallel = read_bit_parallel(r, h.bp, n);
  if (h.bp_width == 0 || h.bp_width > kMaxBitParallelWidth) {
    throw CorruptionError("bit-parallel width out of range");
  }

  std::uint64_t out_parents = 0, in_parents = 0;
  if (paths) {
    if (h.parents == 0) throw CorruptionError("paths flag set without parent section");
    out_parents = h.parents;
    if (directed) {
      Reader probe(bytes);
      const auto table = read_table(probe, h.parents, n);
      in_parents = h.parents + table[n];
    }
  }
  sets.out = read_labels<D>(r, h.out, n, out_parents);
  if (directed) {
    if (h.in == 0) throw CorruptionError("directed index without in-label section");
    sets.in = read_labels<D>(r, h.in, n, in_parents);
  }

  IndexMetadata meta;
  meta.flags = {directed, (h.flags & index_file::kFlagWeighted) != 0, paths};
  meta.bp_width = h.bp_width;
  meta.bp_roots = h.bp_roots;
  meta.num_edge_slots = h.m;
  try {
    return Index(meta, std::move(order), std::move(ids), std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw CorruptionError(std::string("inconsistent index: ") + e.what());
  }
}

}  // namespace

std::vector<std::uint8_t> serialize_index(const Index& index) {
  return std::visit([&](const auto& sets) { return serialize_sets(index, sets); }, index.labels());
}

Index deserialize_index(std::span<const std::uint8_t> bytes) {
  const Header h = parse_header(bytes);
  if (h.file_size != bytes.size()) {
    throw CorruptionError("index file size " + std::to_string(bytes.size()) +
                          " does not match header (" + std::to_string(h.file_size) + ")");
  }
  if ((h.flags & index_file::kFlagWeighted) != 0) {
    return deserialize_sets<WeightedDistance>(bytes, h);
  }
  return deserialize_sets<HopDistance>(bytes, h);
}

std::uint64_t save_index(const Index& index, std::ostream& out) {
  const auto bytes = serialize_index(index);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed to write index");
  return bytes.size();
}

std::uint64_t save_index_file(const Index& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return save_index(index, out);
}

Index load_index(std::istream& in) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return deserialize_index(bytes);
}

Index load_index_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index file " + path.string());
  return load_index(in);
}

DiskIndex::DiskIndex(const std::filesystem::path& path) : file_(path, std::ios::binary) {
  if (!file_) throw std::runtime_error("cannot open index file " + path.string());
  std::vector<std::uint8_t> header(kHeaderSize);
  file_.read(reinterpret_cast<char*>(header.data()), kHeaderSize);
  header.resize(static_cast<std::size_t>(file_.gcount()));
  const Header h = parse_header(header);
  n_ = h.n;
  flags_ = h.flags;
  bp_section_ = h.bp;
  label_sections_ = {h.out, h.in};

  const auto load_table = [&](std::uint64_t section, std::vector<std::uint64_t>& table) {
    if (section == 0) return;
    std::vector<std::uint8_t> raw((n_ + 1) * 8);
    file_.seekg(static_cast<std::streamoff>(section));
    file_.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (file_.gcount() != static_cast<std::streamsize>(raw.size())) {
      throw CorruptionError("index file is truncated");
    }
    table.resize(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) table[i] = read_le<std::uint64_t>(raw.data() + 8 * i);
  };
  if (h.bp_roots > 0) load_table(h.bp, offsets_[0]);
  load_table(h.out, offsets_[1]);
  if (directed()) load_table(h.in, offsets_[2]);
}

std::vector<std::uint8_t> DiskIndex::read_region(std::uint64_t section, VertexId v, std::size_t table) {
  const auto& offsets = offsets_[table];
  const std::uint64_t begin = offsets[v];
  const std::uint64_t len = offsets[v + 1] - begin;
  std::vector<std::uint8_t> buf(len);
  file_.clear();
  file_.seekg(static_cast<std::streamoff>(section + begin));
  file_.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len));
  if (file_.gcount() != static_cast<std::streamsize>(len)) throw CorruptionError("index file is truncated");
  return buf;
}

namespace {

template <typename D>
Distance merge_records(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  const auto ca = read_le<std::uint32_t>(a.data());
  const auto cb = read_le<std::uint32_t>(b.data());
  const auto rank = [](const std::vector<std::uint8_t>& rec, std::size_t i) {
    return read_le<std::uint32_t>(rec.data() + 4 + 4 * i);
  };
  const auto dist = [](const std::vector<std::uint8_t>& rec, std::uint32_t count, std::size_t i) {
    return Distance{read_le<D>(rec.data() + 4 + 4 * std::size_t{count} + sizeof(D) * i)};
  };
  Distance best = kInfinity;
  std::size_t i = 0, j = 0;
  while (i + 1 < ca && j + 1 < cb) {
    const auto x = rank(a, i);
    const auto y = rank(b, j);
    if (x == y) {
      best = std::min(best, dist(a, ca, i) + dist(b, cb, j));
      ++i;
      ++j;
    } else if (x < y) {
      ++i;
    } else {
      ++j;
    }
  }
  return best;
}

std::vector<BitParallelEntry> parse_bp_record(const std::vector<std::uint8_t>& rec) {
  const auto count = read_le<std::uint32_t>(rec.data());
  std::vector<BitParallelEntry> entries(count);
  const std::uint8_t* p = rec.data() + 4;
  for (auto& e : entries) {
    e.root_rank = read_le<std::uint32_t>(p);
    e.dist = p[4];
    e.mask_m1 = read_le<std::uint64_t>(p + 5);
    e.mask_0 = read_le<std::uint64_t>(p + 13);
    p += kBpEntrySize;
  }
  return entries;
}

}  // namespace

Distance DiskIndex::distance(VertexId s, VertexId t) {
  if (s >= n_ || t >= n_) throw std::out_of_range("query vertex out of range");
  Distance best = kInfinity;
  if (!offsets_[0].empty()) {
    best = bp_query(parse_bp_record(read_region(bp_section_, s, 0)),
                    parse_bp_record(read_region(bp_section_, t, 0)));
  }
  const auto a = read_region(label_sections_[0], s, 1);
  const auto b = directed() ? read_region(label_sections_[1], t, 2) : read_region(label_sections_[0], t, 1);
  const Distance normal = weighted() ? merge_records<WeightedDistance>(a, b) : merge_records<HopDistance>(a, b);
  return std::min(best, normal);
}

}  // namespace pll
