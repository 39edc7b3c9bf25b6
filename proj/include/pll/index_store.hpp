#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pll/index.hpp"

namespace pll {

// Index file layout. All integers little-endian.
//
//   header (80 bytes)
//     0  magic "PLL1"          4  u16 version        6  u8 flags (1 directed, 2 weighted, 4 paths)
//     7  u8 bp width           8  u32 bp roots (t)   12 u8 order strategy, 3 zero bytes
//     16 u64 n                 24 u64 m (edge slots)
//     32 u64 order section     40 u64 bp section     48 u64 out-label section
//     56 u64 in-label section  64 u64 parent section 72 u64 file size
//   order section:  u32 vertex_at[n], u64 external_id[n]
//   bp section:     u64 offsets[n+1] (relative to the section), then per vertex
//                   u32 count and count x {u32 root_rank, u8 dist, u64 mask_m1, u64 mask_0}
//   label section:  u64 offsets[n+1], then per vertex u32 count (sentinel
//                   included), u32 ranks[count], dists[count] (u8, or u32 if weighted)
//   parent section: per label set (out, then in), u64 offsets[n+1] and per
//                   vertex u32 parents[count]
//
// Absent sections have offset 0.
namespace index_file {
inline constexpr std::array<char, 4> kMagic{'P', 'L', 'L', '1'};
inline constexpr std::uint16_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 80;
inline constexpr std::size_t kBpEntrySize = 4 + 1 + 8 + 8;
inline constexpr std::uint8_t kFlagDirected = 1;
inline constexpr std::uint8_t kFlagWeighted = 2;
inline constexpr std::uint8_t kFlagPaths = 4;
}  // namespace index_file

// Not an index file, or an unsupported version.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated or internally inconsistent index file.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> serialize_index(const Index& index);
Index deserialize_index(std::span<const std::uint8_t> bytes);

// Returns the number of bytes written.
std::uint64_t save_index(const Index& index, std::ostream& out);
std::uint64_t save_index_file(const Index& index, const std::filesystem::path& path);
Index load_index(std::istream& in);
Index load_index_file(const std::filesystem::path& path);

/// Answers queries straight from an index file: the per-vertex offset tables
/// are kept in memory and each endpoint costs one read of its label region
/// (plus one for its bit-parallel region when present).
class DiskIndex {
 public:
  explicit DiskIndex(const std::filesystem::path& path);

  std::size_t num_vertices() const { return n_; }
  bool directed() const { return (flags_ & index_file::kFlagDirected) != 0; }
  bool weighted() const { return (flags_ & index_file::kFlagWeighted) != 0; }

  Distance distance(VertexId s, VertexId t);

 private:
  std::vector<std::uint8_t> read_region(std::uint64_t section, VertexId v, std::size_t table);

  std::ifstream file_;
  std::uint64_t n_ = 0;
  std::uint8_t flags_ = 0;
  std::uint64_t bp_section_ = 0;
  std::array<std::uint64_t, 2> label_sections_{};
  // Offset tables: 0 = bp, 1 = out labels, 2 = in labels.
  std::array<std::vector<std::uint64_t>, 3> offsets_;
};

}  // namespace pll
