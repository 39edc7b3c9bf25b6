#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pll/analysis.hpp"
#include "pll/commands.hpp"
#include "pll/generators.hpp"
#include "pll/graph.hpp"
#include "pll/index_store.hpp"

namespace {

struct GraphFlags {
  bool directed = false;
  bool weighted = false;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& flags) {
  cmd->add_flag("--directed", flags.directed, "Treat edges as directed");
  cmd->add_flag("--weighted", flags.weighted, "Read a third column of non-negative integer weights");
}

void add_order_flags(CLI::App* cmd, std::string& order, pll::OrderOptions& options) {
  cmd->add_option("--order", order, "Vertex ordering strategy")
      ->check(CLI::IsMember({"degree", "random", "closeness"}));
  cmd->add_option("--seed", options.seed, "Seed for random and closeness orders");
  cmd->add_option("--closeness-samples", options.closeness_samples, "BFS samples for closeness order")
      ->check(CLI::PositiveNumber);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shortest-path distance queries with pruned landmark labeling"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph as an edge list");
  std::string model = "pa";
  std::size_t gen_n = 1000, gen_m = 4000, gen_attach = 3;
  std::uint64_t gen_seed = 1;
  pll::Weight max_weight = 0;
  bool gen_directed = false;
  std::string gen_out;
  gen->add_option("--model", model, "er (Erdos-Renyi G(n,m)) or pa (preferential attachment)")
      ->check(CLI::IsMember({"er", "pa"}));
  gen->add_option("-n,--vertices", gen_n, "Number of vertices")->check(CLI::PositiveNumber);
  gen->add_option("-m,--edges", gen_m, "Number of edges (er)");
  gen->add_option("--attach", gen_attach, "Edges per new vertex (pa)")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--max-weight", max_weight, "Emit uniform weights in [1, W]");
  gen->add_flag("--directed", gen_directed, "Directed edges (er only)");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build an index from an edge list");
  std::string graph_path, index_path, order_name = "degree";
  GraphFlags construct_flags;
  pll::ConstructConfig config;
  std::int64_t bp_roots = -1;
  construct->add_option("graph", graph_path, "Edge list file")->required()->check(CLI::ExistingFile);
  construct->add_option("-o,--out", index_path, "Index file to write")->required();
  add_graph_flags(construct, construct_flags);
  add_order_flags(construct, order_name, config.order);
  construct->add_option("--bp-roots", bp_roots, "Bit-parallel roots t (default 16, or 64 on large graphs)");
  construct->add_option("--bp-width", config.bp_width, "Neighbors per bit-parallel root")
      ->check(CLI::Range(1, 64));
  construct->add_flag("--paths", config.paths, "Store parent pointers for path queries");

  // query
  auto* query = app.add_subcommand("query", "Answer distance queries read as 'u v' lines");
  std::string pairs_path;
  bool want_paths = false, use_disk = false;
  query->add_option("-i,--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  query->add_option("--pairs", pairs_path, "Pairs file (default stdin)")->check(CLI::ExistingFile);
  query->add_flag("--path", want_paths, "Also print the shortest path (needs --paths index)");
  query->add_flag("--disk", use_disk, "Read labels from the file per query instead of loading it");

  // verify
  auto* verify = app.add_subcommand("verify", "Check an index against BFS/Dijkstra");
  std::uint64_t sampled = 0, verify_seed = 0;
  verify->add_option("graph", graph_path, "Edge list file")->required()->check(CLI::ExistingFile);
  verify->add_option("-i,--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  verify->add_option("--sampled", sampled, "Check this many pairs instead of all pairs");
  verify->add_option("--seed", verify_seed, "Seed for sampled mode");

  // bench
  auto* bench = app.add_subcommand("bench", "Measure query latency on random pairs");
  std::size_t num_queries = 1'000'000;
  std::uint64_t bench_seed = 0;
  bench->add_option("-i,--index", index_path, "Index file")->required()->check(CLI::ExistingFile);
  bench->add_option("-q,--queries", num_queries, "Number of random queries");
  bench->add_option("--seed", bench_seed, "Seed for the query pairs");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Write pruning, coverage and label-size CSVs");
  GraphFlags analyze_flags;
  std::size_t coverage_pairs = pll::analysis::kDefaultCoveragePairs;
  std::string out_dir = ".";
  std::uint32_t analyze_bp = 0;
  analyze->add_option("graph", graph_path, "Edge list file")->required()->check(CLI::ExistingFile);
  add_graph_flags(analyze, analyze_flags);
  add_order_flags(analyze, order_name, config.order);
  analyze->add_option("--bp-roots", analyze_bp, "Bit-parallel roots t (default 0)");
  analyze->add_option("--pairs", coverage_pairs, "Random pairs for the coverage curves");
  analyze->add_option("--out-dir", out_dir, "Directory for prune.csv, coverage.csv, label_sizes.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::vector<pll::Edge> edges = model == "er"
                                         ? pll::gen::erdos_renyi(gen_n, gen_m, gen_seed, gen_directed)
                                         : pll::gen::preferential_attachment(gen_n, gen_attach, gen_seed);
      if (max_weight > 0) pll::gen::assign_weights(edges, 1, max_weight, gen_seed + 1);
      const auto g = pll::Graph::from_edges(edges, gen_directed && model == "er", max_weight > 0);
      if (gen_out.empty()) {
        pll::write_edge_list(std::cout, g);
      } else {
        auto out = open_out(gen_out);
        pll::write_edge_list(out, g);
      }
      return 0;
    }

    if (construct->parsed()) {
      config.directed = construct_flags.directed;
      config.weighted = construct_flags.weighted;
      config.order.strategy = pll::parse_order_strategy(order_name);
      if (bp_roots >= 0) config.bp_roots = static_cast<std::uint32_t>(bp_roots);
      const auto report = pll::run_construct(graph_path, index_path, config);
      pll::print_report(std::cout, report);
      return 0;
    }

    if (query->parsed()) {
      std::ifstream pairs_file;
      if (!pairs_path.empty()) pairs_file.open(pairs_path);
      std::istream& pairs = pairs_path.empty() ? std::cin : pairs_file;
      if (use_disk) {
        // The disk reader works on dense ids, so resolve external ids from the order section.
        const auto index = pll::load_index_file(index_path);
        pll::DiskIndex disk(index_path);
        std::string line;
        while (std::getline(pairs, line)) {
          std::istringstream fields(line);
          std::uint64_t a = 0, b = 0;
          if (!(fields >> a >> b)) {
            std::cout << "error: malformed line\n";
            continue;
          }
          const auto s = index.find_vertex(a), t = index.find_vertex(b);
          if (!s || !t) {
            std::cout << "error: unknown vertex " << (s ? b : a) << '\n';
            continue;
          }
          const auto d = disk.distance(*s, *t);
          if (d == pll::kInfinity) {
            std::cout << "inf\n";
          } else {
            std::cout << d << '\n';
          }
        }
        return 0;
      }
      const auto index = pll::load_index_file(index_path);
      pll::run_queries(index, pairs, std::cout, want_paths);
      return 0;
    }

    if (verify->parsed()) {
      const auto index = pll::load_index_file(index_path);
      const auto g = pll::load_edge_list_file(graph_path, index.flags().directed, index.flags().weighted);
      pll::VerifyOptions options;
      if (sampled > 0) options.sampled_pairs = sampled;
      options.seed = verify_seed;
      const auto report = pll::verify_index(g, index, options);
      std::cout << "pairs_checked " << report.pairs_checked << '\n'
                << "mismatches    " << report.mismatches << '\n';
      if (report.witness) {
        const auto& w = *report.witness;
        const auto show = [](pll::Distance d) { return d == pll::kInfinity ? std::string("inf") : std::to_string(d); };
        std::cout << "witness       " << g.external_id(w.s) << ' ' << g.external_id(w.t) << " expected "
                  << show(w.expected) << " got " << show(w.actual) << '\n';
      }
      std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
      return report.passed() ? 0 : 1;
    }

    if (bench->parsed()) {
      const auto index = pll::load_index_file(index_path);
      std::cout << pll::format_latency(pll::bench_queries(index, num_queries, bench_seed));
      return 0;
    }

    if (analyze->parsed()) {
      const auto g = pll::load_edge_list_file(graph_path, analyze_flags.directed, analyze_flags.weighted);
      config.directed = analyze_flags.directed;
      config.weighted = analyze_flags.weighted;
      config.order.strategy = pll::parse_order_strategy(order_name);
      config.bp_roots = analyze_bp;
      pll::BuildReport report;
      pll::BuildStats stats;
      const auto index = pll::construct_index(g, config, report, &stats);
      report.index_bytes = pll::serialize_index(index).size();
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      {
        auto out = open_out(dir / "prune.csv");
        pll::analysis::write_prune_csv(out, stats, index);
      }
      {
        auto out = open_out(dir / "coverage.csv");
        pll::analysis::write_coverage_csv(out, pll::analysis::analyze_coverage(index, coverage_pairs, config.order.seed));
      }
      {
        auto out = open_out(dir / "label_sizes.csv");
        pll::analysis::write_label_sizes_csv(out, pll::analysis::label_size_distribution(index));
      }
      pll::print_report(std::cout, report);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
