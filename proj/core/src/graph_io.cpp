#include "balance/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "balance/errors.hpp"

namespace balance {
namespace detail {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool is_skippable(std::string_view line) {
  const std::size_t first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

double parse_double(std::string_view text, std::size_t line_no, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "' at line " +
                     std::to_string(line_no));
  }
  return value;
}

std::uint64_t parse_count(std::string_view text, std::size_t line_no, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(text) + "' at line " +
                     std::to_string(line_no));
  }
  return value;
}

}  // namespace detail

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

Graph parse_edges(std::istream& in, bool with_probabilities) {
  GraphBuilder builder;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_skippable(line)) continue;
    const auto fields = detail::split_fields(line);
    if (fields.size() == 1) {
      // Bare label: declares a vertex, possibly isolated.
      builder.intern(fields[0]);
      continue;
    }
    const std::size_t expected = with_probabilities ? 4 : 2;
    if (fields.size() != expected && !(fields.size() == 4 && !with_probabilities)) {
      throw InputError("expected " + std::to_string(expected) + " fields at line " +
                       std::to_string(line_no));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw InputError("empty vertex label at line " + std::to_string(line_no));
    }
    double p1 = 0.0;
    double p2 = 0.0;
    if (with_probabilities) {
      p1 = detail::parse_double(fields[2], line_no, "probability");
      p2 = detail::parse_double(fields[3], line_no, "probability");
      if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0) {
        throw InputError("probability out of range at line " + std::to_string(line_no));
      }
    }
    if (fields[0] == fields[1]) {
      throw InputError("self-loop at line " + std::to_string(line_no));
    }
    const VertexId src = builder.intern(fields[0]);
    const VertexId dst = builder.intern(fields[1]);
    if (!seen.insert((std::uint64_t{src} << 32) | dst).second) {
      throw InputError("duplicate edge at line " + std::to_string(line_no));
    }
    builder.add_edge(src, dst, p1, p2);
  }
  return std::move(builder).build();
}

}  // namespace

Graph parse_edge_list(std::istream& in) { return parse_edges(in, true); }

Graph load_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

Graph parse_topology(std::istream& in) { return parse_edges(in, false); }

Graph load_topology(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_topology(in);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

// True when reloading the bare edge lines reproduces the same id assignment.
bool edges_imply_vertex_order(const Graph& g) {
  VertexId next = 0;
  for (const Edge& e : g.edges()) {
    for (VertexId v : {e.src, e.dst}) {
      if (v > next) return false;
      if (v == next) ++next;
    }
  }
  return next == g.num_vertices();
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  if (!edges_imply_vertex_order(g)) {
    for (const std::string& name : g.names()) out << name << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << g.name(e.src) << '\t' << g.name(e.dst) << '\t' << format_double(e.p1) << '\t'
        << format_double(e.p2) << '\n';
  }
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace balance
