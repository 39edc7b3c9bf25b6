#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "pll/commands.hpp"
#include "pll/index_store.hpp"
#include "pll/labeling.hpp"
#include "pll/ordering.hpp"
#include "test_support.hpp"

using namespace pll;

namespace {

std::vector<Index> sample_indices() {
  std::vector<Index> out;
  const auto u = test::scale_free(300, 3, 2);
  out.push_back(build_index(u, order_degree(u)));
  out.push_back(build_index_hybrid(u, order_degree(u), 16, 64));
  out.push_back(build_index_hybrid(u, order_random(u, 1), 4, 7));
  out.push_back(build(u, order_degree(u), {0, 64, true}));
  const auto d = test::random_graph(200, 600, 3, true);
  out.push_back(build(d, order_degree(d), {}));
  out.push_back(build(d, order_degree(d), {0, 64, true}));
  const auto w = test::random_weighted(200, 500, 0, 1000, 4);
  out.push_back(build(w, order_closeness(w, 10, 1), {}));
  const auto wd = test::random_weighted(200, 600, 1, 10, 5, true);
  out.push_back(build(wd, order_degree(wd), {0, 64, true}));
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pll_test_" + name);
}

}  // namespace

TEST_CASE("round trip is byte-identical and query-equivalent") {
  std::mt19937_64 rng(3);
  for (const auto& index : sample_indices()) {
    const auto bytes = serialize_index(index);
    const auto loaded = deserialize_index(bytes);
    CHECK(loaded == index);
    CHECK(serialize_index(loaded) == bytes);
    CHECK(loaded.flags() == index.flags());
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(index.num_vertices() - 1));
    for (int i = 0; i < 1000; ++i) {
      const VertexId s = pick(rng), t = pick(rng);
      REQUIRE(query_distance(loaded, s, t) == query_distance(index, s, t));
    }
  }
}

TEST_CASE("stream and file helpers") {
  const auto g = test::random_graph(80, 200, 1, true);
  const auto index = build(g, order_degree(g), {});
  std::stringstream buf;
  const auto written = save_index(index, buf);
  CHECK(written == buf.str().size());
  const auto loaded = load_index(buf);
  CHECK(loaded.flags().directed);
  CHECK(loaded == index);

  const auto path = temp_file("helpers.idx");
  CHECK(save_index_file(index, path) == written);
  CHECK(load_index_file(path) == index);
  std::filesystem::remove(path);
}

TEST_CASE("single-vertex file size") {
  const auto g = test::path_graph(1);
  const auto bytes = serialize_index(build_index(g, order_degree(g)));
  // header + order (u32 + u64) + bp (table of 2 + count) + labels (table of 2 + count + 2 ranks + 2 dists)
  CHECK(bytes.size() == index_file::kHeaderSize + 12 + (16 + 4) + (16 + 4 + 8 + 2));
  CHECK(bytes.size() == 142);
}

TEST_CASE("bad files are rejected") {
  const auto g = test::scale_free(60, 2, 1);
  const auto bytes = serialize_index(build_index_hybrid(g, order_degree(g), 2, 64));

  auto magic = bytes;
  magic[0] = 'X';
  CHECK_THROWS_AS(deserialize_index(magic), FormatError);

  auto version = bytes;
  version[4] = 9;
  CHECK_THROWS_AS(deserialize_index(version), FormatError);

  auto flags = bytes;
  flags[6] = 0x80;
  CHECK_THROWS_AS(deserialize_index(flags), FormatError);

  for (std::size_t cut = 0; cut < bytes.size(); cut += 7) {
    const std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(cut));
    CHECK_THROWS(deserialize_index(part));
  }
  const std::vector<std::uint8_t> no_tail(bytes.begin(), bytes.end() - 3);
  CHECK_THROWS_AS(deserialize_index(no_tail), CorruptionError);
}

TEST_CASE("label regions are contiguous") {
  const auto g = test::scale_free(200, 2, 8);
  const auto loaded = deserialize_index(serialize_index(build_index(g, order_degree(g))));
  const auto& out = loaded.hop_labels().out;
  const auto offsets = out.offsets();
  for (VertexId v = 0; v < 200; ++v) CHECK(offsets[v + 1] - offsets[v] == out.entry_count(v) + 1);
  CHECK(offsets.back() == out.ranks().size());
}

TEST_CASE("disk index answers like the loaded index") {
  std::mt19937_64 rng(5);
  int which = 0;
  for (const auto& index : sample_indices()) {
    const auto path = temp_file("disk" + std::to_string(which++) + ".idx");
    save_index_file(index, path);
    DiskIndex disk(path);
    CHECK(disk.num_vertices() == index.num_vertices());
    CHECK(disk.directed() == index.flags().directed);
    CHECK(disk.weighted() == index.flags().weighted);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(index.num_vertices() - 1));
    for (int i = 0; i < 500; ++i) {
      const VertexId s = pick(rng), t = pick(rng);
      REQUIRE(disk.distance(s, t) == query_distance(index, s, t));
    }
    std::filesystem::remove(path);
  }
}

TEST_CASE("report average matches a recount from the saved file") {
  const auto g = test::scale_free(500, 3, 6);
  const auto path = temp_file("report.idx");
  ConstructConfig config;
  BuildReport report;
  const auto index = construct_index(g, config, report);
  save_index_file(index, path);
  const auto loaded = load_index_file(path);
  std::size_t total = 0;
  for (VertexId v = 0; v < loaded.num_vertices(); ++v) total += loaded.label_entries(v);
  CHECK(report.avg_label_entries == doctest::Approx(static_cast<double>(total) / 500));
  std::filesystem::remove(path);
}
