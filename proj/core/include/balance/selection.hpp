#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/graph.hpp"
#include "balance/objective.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

// One step of a seed-selection loop. Single-element steps set one side;
// common and pair steps set both.
struct SeedOption {
  enum class Kind {
    kCommon,      // <c, c>: c joins S1 and S2
    kToSecond,    // <∅, s>: s joins S2
    kToFirst,     // <s, ∅>: s joins S1
    kPair,        // <s2, s1>: s2 joins S1, s1 joins S2
  };

  Kind kind = Kind::kToFirst;
  std::optional<VertexId> to_first;
  std::optional<VertexId> to_second;

  static SeedOption common(VertexId c) { return {Kind::kCommon, c, c}; }
  static SeedOption first(VertexId v) { return {Kind::kToFirst, v, std::nullopt}; }
  static SeedOption second(VertexId v) { return {Kind::kToSecond, std::nullopt, v}; }
  static SeedOption pair(VertexId into_first, VertexId into_second) {
    return {Kind::kPair, into_first, into_second};
  }

  friend bool operator==(const SeedOption&, const SeedOption&) = default;
};

// e.g. "<3,3>", "<-,7>", "<2,->", "<2,7>", with external labels when a graph
// is supplied.
std::string describe(const SeedOption& option, const Graph* g = nullptr);

struct TraceStep {
  std::size_t iteration = 0;
  SeedOption option;
  // Φ after the step (Ω for Cover).
  double objective = 0.0;
};

struct SelectionResult {
  std::string algorithm;
  VertexSet s1;
  VertexSet s2;
  std::vector<TraceStep> trace;
  // Breakdown of (s1, s2) on the ensemble the algorithm ran on; empty for
  // methods that never look at an ensemble.
  std::optional<ObjectiveBreakdown> final;
  // Set when the method carries no guarantee in the model it ran on.
  bool heuristic = false;

  std::size_t seeds_used() const { return s1.count() + s2.count(); }
};

// Greedy on Ω over the ground set V x {1, 2}, one element per iteration,
// filling the budget (zero-gain picks included, lowest vertex id first, then
// campaign 1). Lazy re-evaluation of stale gains is sound here because Ω is
// monotone and submodular. Returns the better of the greedy sets and (∅, ∅)
// under Φ.
SelectionResult run_cover(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k);

// Each iteration compares the best common seed <c, c>, the best s in I1 added
// to S2, and the best s in I2 added to S1, and takes the feasible option with
// the highest Φ. Stops when nothing fits or nothing improves Φ.
SelectionResult run_common(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                           const VertexSet& i2, std::size_t k);

// As run_common with unrestricted single-seed pools plus the pair option that
// takes both single-seed picks at once.
SelectionResult run_hedge(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k);

// Adds the (vertex, campaign) element with the largest Φ; stops when no
// element strictly improves Φ.
SelectionResult run_greedy_phi(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                               const VertexSet& i2, std::size_t k);

}  // namespace balance
