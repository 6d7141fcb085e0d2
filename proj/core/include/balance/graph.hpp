#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "balance/vertex_set.hpp"

namespace balance {

enum class Campaign { kFirst = 1, kSecond = 2 };

// A directed edge u -> v carrying one propagation probability per campaign.
// Direction is information flow: v sees (and may repost) what u posts.
struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  double p1 = 0.0;
  double p2 = 0.0;

  double probability(Campaign c) const { return c == Campaign::kFirst ? p1 : p2; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed graph with dense vertex ids, an external-label table and
// a compressed out-edge index.
class Graph {
 public:
  Graph() = default;

  // Validates and indexes. Throws InputError on self-loops, parallel edges,
  // out-of-range endpoints or probabilities outside [0, 1].
  Graph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Ids of edges leaving u, in edge-sequence order.
  std::span<const EdgeId> out_edges(VertexId u) const {
    return {out_edge_ids_.data() + out_offsets_[u], out_edge_ids_.data() + out_offsets_[u + 1]};
  }
  std::size_t out_degree(VertexId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }

  std::span<const std::string> names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view label) const;

  VertexSet empty_set() const { return VertexSet(num_vertices()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_ = {0};
  std::vector<EdgeId> out_edge_ids_;
  std::unordered_map<std::string, VertexId> index_;
};

// Assigns dense ids to external labels in first-seen order.
class GraphBuilder {
 public:
  VertexId intern(std::string_view label);
  std::optional<VertexId> find(std::string_view label) const;
  void add_edge(VertexId src, VertexId dst, double p1, double p2);
  std::size_t num_vertices() const { return names_.size(); }
  Graph build() &&;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
};

// True iff p1(e) == p2(e) exactly for every edge. Vacuously true when empty.
bool validate_correlated(const Graph& g);

}  // namespace balance
