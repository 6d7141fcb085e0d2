#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/graph.hpp"
#include "balance/selection.hpp"

namespace balance {

// Candidate list length for Union/Intersection when none is given.
std::size_t default_list_length(std::size_t k);

// Alternating best responses under Φ: campaign 1 adds its best vertex, then
// campaign 2, until S1 holds ceil(k/2) and S2 floor(k/2) seeds. Every round
// adds a vertex, even when Φ drops.
SelectionResult run_bblo(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                         const VertexSet& i2, std::size_t k);

// Classic influence-maximization greedy on E[|r_c(initial ∪ S)|]: `length`
// vertices (capped at n) in discovery order, ties to the lowest id, zero-gain
// picks allowed.
std::vector<VertexId> infmax_greedy(const WorldEnsemble& ens, const Graph& g, Campaign campaign,
                                    const VertexSet& initial, std::size_t length);

// First `count` distinct vertices of first[0], second[0], first[1], ...
std::vector<VertexId> union_prefix(std::span<const VertexId> first, std::span<const VertexId> second,
                                   std::size_t count);
// First `count` vertices of `first` also present in `second`, padded from
// union_prefix order when the intersection runs short.
std::vector<VertexId> intersection_prefix(std::span<const VertexId> first,
                                          std::span<const VertexId> second, std::size_t count);

// S1 = S2 = floor(k/2) common seeds built from the two infmax lists.
// Requires length >= min(k, n).
SelectionResult run_union(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k, std::size_t length);
SelectionResult run_intersection(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                                 const VertexSet& i2, std::size_t k, std::size_t length);

// Top min(k, n) vertices by out-degree (follower count), ties to the lowest
// id, dealt alternately to S1 and S2.
SelectionResult run_high_degree(const Graph& g, std::size_t k);

// floor(k/2) distinct uniform vertices per campaign, drawn independently.
// Requires k <= 2n.
SelectionResult run_random(const Graph& g, std::size_t k, std::uint64_t rng_seed);

}  // namespace balance
