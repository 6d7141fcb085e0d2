#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "balance/graph.hpp"

namespace balance {

// Edge-list text format: one edge per line, `src<TAB>dst<TAB>p1<TAB>p2`.
// Lines starting with '#' and blank lines are skipped. Lines without any tab
// are split on whitespace instead. A line holding a single label declares a
// vertex without edges. Errors carry the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

// Same layout, but only src and dst are read; probabilities start at zero.
Graph parse_topology(std::istream& in);
Graph load_topology(const std::filesystem::path& path);

// Writes probabilities in shortest round-trip form, so reloading is bit-exact.
// Vertex declaration lines are emitted first whenever the edge order alone
// would not reproduce the id assignment (isolated vertices, for example).
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

namespace detail {
std::vector<std::string_view> split_fields(std::string_view line);
bool is_skippable(std::string_view line);
double parse_double(std::string_view text, std::size_t line_no, std::string_view what);
std::uint64_t parse_count(std::string_view text, std::size_t line_no, std::string_view what);
}  // namespace detail

}  // namespace balance
