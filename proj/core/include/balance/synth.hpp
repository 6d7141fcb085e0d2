#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "balance/cascade.hpp"
#include "balance/graph.hpp"
#include "balance/set_cover.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

enum class SynthKind { kTwoCommunity, kRandomDag, kSetCoverReduction };

std::string_view to_string(SynthKind kind);
// Throws ConfigError for anything but two-community, random-dag or
// set-cover-reduction.
SynthKind parse_synth_kind(std::string_view text);

struct SynthParams {
  SynthKind kind = SynthKind::kTwoCommunity;
  std::size_t n = 100;
  // 0 picks 5n for two-community and min(2n, n(n-1)/2) for random-dag.
  std::size_t edges = 0;
  // two-community: share of edges whose endpoints lie in different halves.
  double cross_fraction = 0.05;
  double min_probability = 0.05;
  double max_probability = 0.3;
  // two-community, heterogeneous: the campaign seeded in the other half
  // spreads over an edge with this multiple of the base probability.
  double away_factor = 0.5;
  std::size_t seeds_per_side = 5;
  CascadeModel model = CascadeModel::kHeterogeneous;
  std::uint64_t seed = 1;
  // set-cover-reduction input.
  SetCoverInstance set_cover;
};

struct SyntheticInstance {
  Graph graph;
  VertexSet i1;
  VertexSet i2;
  // Budget of the reduced instance; 0 for the other kinds.
  std::size_t budget = 0;
};

// two-community: halves a0.. and b0..; edge sources are skewed towards low
// ids within their half so a few vertices carry most out-edges. I1 lies in
// the first half, I2 in the second.
// random-dag: edges go forward in a random vertex order.
// set-cover-reduction: reduction_from_set_cover(params.set_cover).
// Deterministic in params. Throws ConfigError on infeasible parameters.
SyntheticInstance generate_synthetic(const SynthParams& params);

// Edge list plus [I1]/[I2] seeds file.
void write_synthetic(const SyntheticInstance& inst, const std::filesystem::path& graph_path,
                     const std::filesystem::path& seeds_path);

}  // namespace balance
