// Command-line front end: graph generation, single-query solving, benchmarks.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sssp/bench.hpp"
#include "sssp/generators.hpp"
#include "sssp/graph.hpp"
#include "sssp/graph_io.hpp"
#include "sssp/solver.hpp"

namespace {

struct GenOpts {
  std::string topology;
  std::uint32_t n = 0;
  double p = 0.1;
  bool p_set = false;
  std::uint64_t seed = 1;
  double side = 10000.0;
  bool side_set = false;
  std::int64_t wmax = 10000;
  bool wmax_set = false;
  std::string output;
};

struct RunOpts {
  std::string graph_file;
  std::uint32_t source = 0;
  std::string variant;
  std::uint32_t target = 0;
  bool target_set = false;
  bool show_paths = false;
};

struct BenchOpts {
  std::string topology;
  std::vector<std::uint32_t> n_list;
  double p = 0.1;
  bool p_set = false;
  std::uint32_t reps = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> variants{"basic", "tree", "heap", "fib"};
  std::string output;
  bool no_warmup = false;
  bool random_source = false;
  std::uint64_t memory_budget_mb = 3072;
};

void print_vertex_line(sssp::Vertex s, sssp::Vertex u,
                       const sssp::ShortestPathResult& result) {
  std::cout << "v-" << s << " to v-" << u << ",\t";
  if (result.labels[u] == sssp::kInfinity) {
    std::cout << "len = infinity. No path exists\n";
    return;
  }
  std::cout << "len = " << result.labels[u] << "\tpath = [";
  const sssp::Path path = sssp::get_path(result.preds, s, u);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i != 0) {
      std::cout << ',';
    }
    std::cout << path[i];
  }
  std::cout << "]\n";
}

int cmd_gen(const GenOpts& opts) {
  sssp::Graph graph;
  std::string comment;
  if (opts.topology == "planar") {
    if (opts.p_set || opts.wmax_set) {
      std::cerr << "error: --p and --wmax are only valid with --topology random\n";
      return 2;
    }
    sssp::PlanarConfig cfg;
    cfg.n = opts.n;
    cfg.side = opts.side;
    cfg.seed = opts.seed;
    graph = sssp::generate_planar(cfg);
    comment = sssp::generator_comment(cfg);
  } else {
    if (opts.side_set) {
      std::cerr << "error: --side is only valid with --topology planar\n";
      return 2;
    }
    sssp::RandomConfig cfg;
    cfg.n = opts.n;
    cfg.p = opts.p;
    if (opts.wmax < 0) {
      std::cerr << "error: --wmax must be positive\n";
      return 2;
    }
    cfg.w_max = static_cast<sssp::Weight>(opts.wmax);
    cfg.seed = opts.seed;
    graph = sssp::generate_random(cfg);
    comment = sssp::generator_comment(cfg);
  }

  std::ofstream out(opts.output);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + opts.output + "'");
  }
  const std::string comments[] = {comment};
  sssp::write_graph(out, graph, comments);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing graph file '" + opts.output + "'");
  }
  std::cout << "n=" << graph.n() << " m=" << graph.m() << "\n";
  return 0;
}

int cmd_run(const RunOpts& opts) {
  std::ifstream in(opts.graph_file);
  if (!in) {
    throw std::runtime_error("cannot open graph file '" + opts.graph_file + "'");
  }
  const sssp::Graph graph = sssp::read_graph(in);
  const std::optional<sssp::Variant> variant =
      sssp::variant_from_name(opts.variant);
  if (!variant) {
    std::cerr << "error: unknown variant '" << opts.variant << "'\n";
    return 2;
  }

  std::cout << "Input graph has " << graph.n() << " vertices and " << graph.m()
            << " arcs\n";

  const auto start = std::chrono::steady_clock::now();
  const sssp::ShortestPathResult result =
      opts.target_set
          ? sssp::solve_target(graph, opts.source, opts.target, *variant)
          : sssp::solve(graph, opts.source, *variant);
  const auto stop = std::chrono::steady_clock::now();
  const double elapsed = std::chrono::duration<double>(stop - start).count();

  std::cout << "Dijkstra (" << sssp::variant_name(*variant) << ") took "
            << elapsed << " sec.\n";

  if (opts.target_set) {
    print_vertex_line(opts.source, opts.target, result);
  } else if (opts.show_paths) {
    std::cout << "Shortest paths from source to each vertex are as follows:\n";
    for (sssp::Vertex u = 0; u < graph.n(); ++u) {
      print_vertex_line(opts.source, u, result);
    }
  }
  return 0;
}

int cmd_bench(const BenchOpts& opts) {
  sssp::BenchPlan plan;
  const std::optional<sssp::Topology> topology =
      sssp::topology_from_name(opts.topology);
  if (!topology) {
    std::cerr << "error: unknown topology '" << opts.topology << "'\n";
    return 2;
  }
  if (*topology == sssp::Topology::planar && opts.p_set) {
    std::cerr << "error: --p is only valid with --topology random\n";
    return 2;
  }
  plan.topology = *topology;
  plan.n_list = opts.n_list;
  plan.p = opts.p;
  plan.reps = opts.reps;
  plan.seed = opts.seed;
  plan.variants.clear();
  for (const std::string& name : opts.variants) {
    const std::optional<sssp::Variant> v = sssp::variant_from_name(name);
    if (!v) {
      std::cerr << "error: unknown variant '" << name << "'\n";
      return 2;
    }
    plan.variants.push_back(*v);
  }
  plan.source_policy = opts.random_source ? sssp::SourcePolicy::random_per_rep
                                          : sssp::SourcePolicy::fixed_zero;
  plan.warmup = !opts.no_warmup;
  plan.memory_budget_bytes = opts.memory_budget_mb << 20;
  sssp::validate(plan);

  const sssp::BenchResult result = sssp::run_bench(plan);
  for (const sssp::SkippedPoint& skip : result.skipped) {
    std::cerr << "skipped: topology=" << sssp::topology_name(skip.topology)
              << " n=" << skip.n << " rep=" << skip.rep << ": " << skip.reason
              << "\n";
  }

  std::ofstream out(opts.output);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + opts.output + "'");
  }
  sssp::write_csv(out, result.records);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing CSV file '" + opts.output + "'");
  }

  std::cout << "wrote " << opts.output << " (" << result.records.size()
            << " records, " << result.skipped.size() << " skipped)\n";
  std::cout << std::left << std::setw(8) << "variant" << std::right
            << std::setw(10) << "n" << std::setw(6) << "runs" << std::setw(14)
            << "mean_s" << std::setw(14) << "stddev_s" << "\n";
  for (const sssp::SummaryRow& row : sssp::summarize(result.records)) {
    std::cout << std::left << std::setw(8) << sssp::variant_name(row.variant)
              << std::right << std::setw(10) << row.n << std::setw(6)
              << row.count << std::setw(14) << row.mean << std::setw(14)
              << row.stddev << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-source shortest paths: generate, solve, benchmark"};
  app.require_subcommand(1);

  GenOpts gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("--topology", gen_opts.topology, "planar or random")
      ->required()
      ->check(CLI::IsMember({"planar", "random"}));
  gen->add_option("--n", gen_opts.n, "vertex count")->required();
  gen->add_option("--p", gen_opts.p, "arc probability (random only)");
  gen->add_option("--seed", gen_opts.seed, "RNG seed");
  gen->add_option("--side", gen_opts.side, "square side length (planar only)");
  gen->add_option("--wmax", gen_opts.wmax, "max arc weight (random only)");
  gen->add_option("-o,--output", gen_opts.output, "output graph file")
      ->required();

  RunOpts run_opts;
  CLI::App* run = app.add_subcommand("run", "Solve shortest paths from a source");
  run->add_option("--graph", run_opts.graph_file, "input graph file")
      ->required();
  run->add_option("--source", run_opts.source, "source vertex")->required();
  run->add_option("--variant", run_opts.variant, "basic, tree, heap, or fib")
      ->required()
      ->check(CLI::IsMember({"basic", "tree", "heap", "fib"}));
  run->add_option("--target", run_opts.target,
                  "stop once this vertex is distinguished");
  run->add_flag("--show-paths", run_opts.show_paths,
                "print one line per vertex");

  BenchOpts bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "Timed sweep, CSV output");
  bench->add_option("--topology", bench_opts.topology, "planar or random")
      ->required()
      ->check(CLI::IsMember({"planar", "random"}));
  bench
      ->add_option("--n-list", bench_opts.n_list,
                   "comma-separated vertex counts, ascending")
      ->required()
      ->delimiter(',');
  bench->add_option("--p", bench_opts.p, "arc probability (random only)");
  bench->add_option("--reps", bench_opts.reps, "repetitions per point");
  bench->add_option("--seed", bench_opts.seed, "base seed");
  bench
      ->add_option("--variants", bench_opts.variants,
                   "comma-separated subset of basic,tree,heap,fib")
      ->delimiter(',');
  bench->add_option("-o,--output", bench_opts.output, "output CSV file")
      ->required();
  bench->add_flag("--no-warmup", bench_opts.no_warmup,
                  "skip the untimed warm-up run per (graph, variant)");
  bench->add_flag("--random-source", bench_opts.random_source,
                  "fresh random source per rep instead of vertex 0");
  bench->add_option("--memory-budget-mb", bench_opts.memory_budget_mb,
                    "skip points whose graphs would exceed this estimate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  run_opts.target_set = run->count("--target") > 0;
  gen_opts.p_set = gen->count("--p") > 0;
  gen_opts.side_set = gen->count("--side") > 0;
  gen_opts.wmax_set = gen->count("--wmax") > 0;
  bench_opts.p_set = bench->count("--p") > 0;

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_opts);
    }
    if (run->parsed()) {
      return cmd_run(run_opts);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
