#include "balance/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "balance/errors.hpp"

namespace balance {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

std::string edge_label(const std::vector<std::string>& names, const Edge& e) {
  return names[e.src] + " -> " + names[e.dst];
}

}  // namespace

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  index_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw InputError("duplicate vertex label '" + names_[v] + "'");
    }
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  std::vector<std::size_t> degree(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.src >= n || e.dst >= n) throw InputError("edge endpoint out of range");
    if (e.src == e.dst) throw InputError("self-loop at " + names_[e.src]);
    if (!is_probability(e.p1) || !is_probability(e.p2)) {
      throw InputError("probability out of range on edge " + edge_label(names_, e));
    }
    const std::uint64_t key = (std::uint64_t{e.src} << 32) | e.dst;
    if (!seen.insert(key).second) {
      throw InputError("duplicate edge " + edge_label(names_, e));
    }
    ++degree[e.src + 1];
  }

  out_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) out_offsets_[v + 1] = out_offsets_[v] + degree[v + 1];
  out_edge_ids_.resize(edges_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    out_edge_ids_[cursor[edges_[id].src]++] = id;
  }
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId GraphBuilder::intern(std::string_view label) {
  const auto [it, inserted] =
      index_.emplace(std::string(label), static_cast<VertexId>(names_.size()));
  if (inserted) names_.emplace_back(label);
  return it->second;
}

std::optional<VertexId> GraphBuilder::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::add_edge(VertexId src, VertexId dst, double p1, double p2) {
  edges_.push_back(Edge{src, dst, p1, p2});
}

Graph GraphBuilder::build() && { return Graph(std::move(names_), std::move(edges_)); }

bool validate_correlated(const Graph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.p1 == e.p2; });
}

}  // namespace balance
