#include "sssp/graph_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace sssp {

namespace {

// Splits on single spaces. Leading, trailing, or doubled spaces yield an
// empty field, which the callers reject.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
std::optional<T> parse_uint(std::string_view field) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::optional<GraphBuilder> builder;
  std::size_t declared_arcs = 0;
  std::size_t seen_arcs = 0;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line.front() == 'c') {
      continue;
    }
    if (line.empty()) {
      throw ParseError(line_no, "blank line");
    }

    const auto fields = split_fields(line);
    if (fields[0] == "p") {
      if (builder) {
        throw ParseError(line_no, "duplicate header line");
      }
      if (fields.size() != 4 || fields[1] != "sp") {
        throw ParseError(line_no, "malformed header; expected 'p sp <n> <m>'");
      }
      const auto n = parse_uint<std::uint64_t>(fields[2]);
      const auto m = parse_uint<std::uint64_t>(fields[3]);
      if (!n || !m) {
        throw ParseError(line_no, "malformed header; expected 'p sp <n> <m>'");
      }
      if (*n > static_cast<std::uint64_t>(kNoVertex)) {
        throw ParseError(line_no, "vertex count " + std::to_string(*n) + " too large");
      }
      builder.emplace(static_cast<std::size_t>(*n));
      declared_arcs = static_cast<std::size_t>(*m);
    } else if (fields[0] == "a") {
      if (!builder) {
        throw ParseError(line_no, "arc line before header");
      }
      if (fields.size() != 4) {
        throw ParseError(line_no, "malformed arc line; expected 'a <u> <v> <w>'");
      }
      const auto u = parse_uint<std::uint64_t>(fields[1]);
      const auto v = parse_uint<std::uint64_t>(fields[2]);
      const auto w = parse_uint<Weight>(fields[3]);
      if (!u || !v) {
        throw ParseError(line_no, "malformed arc line; expected 'a <u> <v> <w>'");
      }
      if (*u >= builder->n() || *v >= builder->n()) {
        throw ParseError(line_no, "vertex out of range for n = " +
                                      std::to_string(builder->n()));
      }
      if (!w) {
        throw ParseError(line_no, "non-integer weight '" + std::string(fields[3]) + "'");
      }
      if (*w > kMaxArcWeight) {
        throw ParseError(line_no, "weight " + std::string(fields[3]) +
                                      " exceeds the maximum arc weight");
      }
      if (seen_arcs == declared_arcs) {
        throw ParseError(line_no, "arc count mismatch: header declares m = " +
                                      std::to_string(declared_arcs));
      }
      builder->add_arc(static_cast<Vertex>(*u), static_cast<Vertex>(*v),
                       static_cast<std::int64_t>(*w));
      ++seen_arcs;
    } else {
      throw ParseError(line_no, "unrecognized line '" + line + "'");
    }
  }

  if (!builder) {
    throw ParseError(line_no, "missing header line");
  }
  if (seen_arcs != declared_arcs) {
    throw ParseError(line_no, "arc count mismatch: header declares m = " +
                                  std::to_string(declared_arcs) + ", found " +
                                  std::to_string(seen_arcs));
  }
  return std::move(*builder).build();
}

void write_graph(std::ostream& out, const Graph& g,
                 std::span<const std::string> comments) {
  for (const auto& comment : comments) {
    out << "c " << comment << '\n';
  }
  out << "p sp " << g.n() << ' ' << g.m() << '\n';
  for (Vertex u = 0; u < g.n(); ++u) {
    for (const Neighbour& nb : g.neighbours(u)) {
      out << "a " << u << ' ' << nb.vertex << ' ' << nb.weight << '\n';
    }
  }
}

}  // namespace sssp
