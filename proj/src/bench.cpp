#include "sssp/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <new>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "sssp/generators.hpp"
#include "sssp/graph_io.hpp"
#include "sssp/rng.hpp"

namespace sssp {

namespace {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("failed to format double");
  }
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, std::string("bad ") + what + " field '" +
                               std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

constexpr std::string_view kCsvHeader =
    "topology,n,m,p,seed,variant,rep,source,elapsed_seconds";

Graph generate(const BenchPlan& plan, std::uint32_t n, std::uint64_t seed) {
  if (plan.topology == Topology::planar) {
    PlanarConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    return generate_planar(cfg);
  }
  RandomConfig cfg;
  cfg.n = n;
  cfg.p = plan.p;
  cfg.seed = seed;
  return generate_random(cfg);
}

}  // namespace

std::string_view topology_name(Topology t) {
  switch (t) {
    case Topology::planar:
      return "planar";
    case Topology::random:
      return "random";
  }
  return "?";
}

std::optional<Topology> topology_from_name(std::string_view name) {
  if (name == "planar") {
    return Topology::planar;
  }
  if (name == "random") {
    return Topology::random;
  }
  return std::nullopt;
}

void validate(const BenchPlan& plan) {
  if (plan.n_list.empty()) {
    throw std::invalid_argument("bench plan: n_list must be nonempty");
  }
  if (!std::is_sorted(plan.n_list.begin(), plan.n_list.end())) {
    throw std::invalid_argument("bench plan: n_list must be sorted ascending");
  }
  if (plan.reps < 1) {
    throw std::invalid_argument("bench plan: reps must be >= 1");
  }
  if (plan.variants.empty()) {
    throw std::invalid_argument("bench plan: variants must be nonempty");
  }
  if (plan.topology == Topology::random && !(plan.p >= 0.0 && plan.p <= 1.0)) {
    throw std::invalid_argument("bench plan: p must be in [0, 1]");
  }
}

std::uint64_t estimated_peak_bytes(Topology topology, std::uint32_t n, double p) {
  const double nd = static_cast<double>(n);
  double arcs = 0.0;
  if (topology == Topology::planar) {
    arcs = 6.0 * nd;  // Delaunay digraph never exceeds 6n - 12 arcs
  } else {
    arcs = p * nd * (nd - 1.0);
  }
  // Builder rows + frozen CSR coexist briefly, so count each arc twice;
  // per-vertex overhead covers row headers, offsets, and solver work arrays.
  const double bytes = 2.0 * arcs * sizeof(Neighbour) + 64.0 * nd + (1 << 20);
  if (bytes >= 9.0e18) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(bytes);
}

BenchResult run_bench(const BenchPlan& plan) {
  validate(plan);
  BenchResult result;
  const double recorded_p = plan.topology == Topology::random ? plan.p : 0.0;

  for (const std::uint32_t n : plan.n_list) {
    for (std::uint32_t rep = 0; rep < plan.reps; ++rep) {
      const std::uint64_t graph_seed = derive_seed(plan.seed, n, rep);
      const std::uint64_t estimate =
          estimated_peak_bytes(plan.topology, n, plan.p);
      if (estimate > plan.memory_budget_bytes) {
        result.skipped.push_back(
            {plan.topology, n, recorded_p, rep,
             "estimated memory " + std::to_string(estimate) +
                 " bytes exceeds budget " +
                 std::to_string(plan.memory_budget_bytes) + " bytes"});
        continue;
      }

      Graph graph;
      try {
        graph = generate(plan, n, graph_seed);
      } catch (const std::bad_alloc&) {
        result.skipped.push_back({plan.topology, n, recorded_p, rep,
                                  "allocation failure during generation"});
        continue;
      }

      Vertex source = 0;
      if (plan.source_policy == SourcePolicy::random_per_rep) {
        Xoshiro256 rng(derive_seed(graph_seed, n, rep));
        source = static_cast<Vertex>(rng.below(graph.n()));
      }

      for (const Variant variant : plan.variants) {
        if (plan.warmup) {
          (void)solve(graph, source, variant);
        }
        const auto start = std::chrono::steady_clock::now();
        const ShortestPathResult run = solve(graph, source, variant);
        const auto stop = std::chrono::steady_clock::now();
        (void)run;
        const double elapsed =
            std::chrono::duration<double>(stop - start).count();
        result.records.push_back({plan.topology, n, graph.m(), recorded_p,
                                  plan.seed, variant, rep, source, elapsed});
      }
    }
  }
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  struct Accumulator {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
  };
  std::vector<std::pair<std::pair<std::uint32_t, Variant>, Accumulator>> groups;

  for (const BenchRecord& rec : records) {
    const std::pair<std::uint32_t, Variant> key{rec.n, rec.variant};
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == key; });
    if (it == groups.end()) {
      groups.push_back({key, {}});
      it = groups.end() - 1;
    }
    Accumulator& acc = it->second;
    ++acc.count;  // Welford's online update
    const double delta = rec.elapsed_seconds - acc.mean;
    acc.mean += delta / static_cast<double>(acc.count);
    acc.m2 += delta * (rec.elapsed_seconds - acc.mean);
  }

  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.first.first, a.first.second) <
           std::make_tuple(b.first.first, b.first.second);
  });

  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    const double stddev =
        acc.count > 1 ? std::sqrt(acc.m2 / static_cast<double>(acc.count - 1))
                      : 0.0;
    rows.push_back({key.second, key.first, acc.count, acc.mean, stddev});
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& rec : records) {
    out << topology_name(rec.topology) << ',' << rec.n << ',' << rec.m << ','
        << format_double(rec.p) << ',' << rec.seed << ','
        << variant_name(rec.variant) << ',' << rec.rep << ',' << rec.source
        << ',' << format_double(rec.elapsed_seconds) << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!saw_header) {
      if (line != kCsvHeader) {
        throw ParseError(line_no, "bad CSV header '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    if (line.empty()) {
      throw ParseError(line_no, "blank CSV row");
    }
    const std::vector<std::string_view> fields = split_csv(line);
    if (fields.size() != 9) {
      throw ParseError(line_no, "expected 9 CSV fields, got " +
                                    std::to_string(fields.size()));
    }
    const std::optional<Topology> topology = topology_from_name(fields[0]);
    if (!topology) {
      throw ParseError(line_no,
                       "unknown topology '" + std::string(fields[0]) + "'");
    }
    const std::optional<Variant> variant = variant_from_name(fields[5]);
    if (!variant) {
      throw ParseError(line_no,
                       "unknown variant '" + std::string(fields[5]) + "'");
    }
    BenchRecord rec;
    rec.topology = *topology;
    rec.n = parse_number<std::uint32_t>(fields[1], line_no, "n");
    rec.m = parse_number<std::uint64_t>(fields[2], line_no, "m");
    rec.p = parse_number<double>(fields[3], line_no, "p");
    rec.seed = parse_number<std::uint64_t>(fields[4], line_no, "seed");
    rec.variant = *variant;
    rec.rep = parse_number<std::uint32_t>(fields[6], line_no, "rep");
    rec.source = parse_number<Vertex>(fields[7], line_no, "source");
    rec.elapsed_seconds =
        parse_number<double>(fields[8], line_no, "elapsed_seconds");
    records.push_back(rec);
  }
  if (!saw_header) {
    throw ParseError(0, "missing CSV header");
  }
  return records;
}

}  // namespace sssp
