#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/solver.hpp"

namespace sssp {

enum class Topology { planar, random };

std::string_view topology_name(Topology t);
std::optional<Topology> topology_from_name(std::string_view name);

enum class SourcePolicy { fixed_zero, random_per_rep };

struct BenchPlan {
  Topology topology = Topology::planar;
  std::vector<std::uint32_t> n_list;  // nonempty, sorted ascending
  double p = 0.1;                     // random topology only
  std::uint32_t reps = 100;
  std::uint64_t seed = 1;
  std::vector<Variant> variants{kAllVariants,
                                kAllVariants + std::size(kAllVariants)};
  SourcePolicy source_policy = SourcePolicy::fixed_zero;
  bool warmup = true;  // one untimed run per (graph, variant) before timing
  std::uint64_t memory_budget_bytes = std::uint64_t{3} << 30;
};

// Throws std::invalid_argument when a plan violates its invariants.
void validate(const BenchPlan& plan);

struct BenchRecord {
  Topology topology;
  std::uint32_t n;
  std::uint64_t m;
  double p;  // 0 for planar
  std::uint64_t seed;
  Variant variant;
  std::uint32_t rep;
  Vertex source;
  double elapsed_seconds;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct SkippedPoint {
  Topology topology;
  std::uint32_t n;
  double p;
  std::uint32_t rep;
  std::string reason;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<SkippedPoint> skipped;
};

// Rough peak-resident estimate for generating + holding one graph; used to
// skip points that would exhaust memory instead of crashing mid-sweep.
std::uint64_t estimated_peak_bytes(Topology topology, std::uint32_t n, double p);

// Runs the sweep. Graph generation and I/O happen outside the timed region;
// each timed region covers exactly one solver invocation. The graph for
// (n, rep) is generated with seed derive_seed(plan.seed, n, rep) and is shared
// by every variant within that rep.
BenchResult run_bench(const BenchPlan& plan);

struct SummaryRow {
  Variant variant;
  std::uint32_t n;
  std::size_t count;
  double mean;
  double stddev;  // sample (n-1); 0 for singleton groups
};

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

// CSV layout: topology,n,m,p,seed,variant,rep,source,elapsed_seconds
// Doubles use shortest round-trip formatting with '.' separators, so
// read_csv(write_csv(records)) reproduces every field exactly.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace sssp
