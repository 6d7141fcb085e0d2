#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "balance/graph.hpp"

namespace balance {

// Retweet counts for one edge u -> v: how often v reposted u, and how often v
// reposted anything at all.
struct InteractionRecord {
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t retweets_uv = 0;
  std::uint64_t total_retweets_v = 0;
};

// A-priori probability that v reposts content of each side. The two values
// are independent and need not sum to one.
struct SidePrior {
  VertexId v = 0;
  double q1 = 0.0;
  double q2 = 0.0;
};

// Blends the destination's side prior with a Laplace-smoothed repost rate:
//   p_i(u, v) = alpha * q_i(v) + (1 - alpha) * (R(u, v) + 1) / (R(v) + 2).
// Edges without a record use R(u, v) = R(v) = 0. Throws InputError when an
// edge's destination has no prior, and std::invalid_argument for alpha
// outside [0, 1].
Graph estimate_probabilities(const Graph& topology, const std::vector<InteractionRecord>& interactions,
                             const std::vector<SidePrior>& priors, double alpha);

// `u<TAB>v<TAB>R(u,v)<TAB>R(v)` by external label; labels must exist in g and
// (u, v) must be an edge.
std::vector<InteractionRecord> parse_interactions(std::istream& in, const Graph& g);
std::vector<InteractionRecord> load_interactions(const std::filesystem::path& path, const Graph& g);

// `v<TAB>q1<TAB>q2` by external label.
std::vector<SidePrior> parse_priors(std::istream& in, const Graph& g);
std::vector<SidePrior> load_priors(const std::filesystem::path& path, const Graph& g);

}  // namespace balance
