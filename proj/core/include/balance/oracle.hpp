#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/exact.hpp"
#include "balance/graph.hpp"
#include "balance/rng.hpp"
#include "balance/set_cover.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

// (1 - 1/e) / 2.
double approximation_ratio();

// Largest number of assignments brute_force_opt will enumerate.
inline constexpr std::size_t kMaxBruteForceAssignments = 1'000'000;

struct OracleReport {
  double opt_value = 0.0;
  // Every (S1, S2) within 1e-9 of opt_value, in enumeration order.
  std::vector<std::pair<VertexSet, VertexSet>> opt_assignments;
  std::size_t instances_checked = 0;
};

// Number of (S1, S2) pairs with |S1| + |S2| <= k over n vertices.
std::uint64_t count_assignments(std::size_t n, std::size_t k);

// Exact optimum over all budget-feasible assignments, each scored with
// exact evaluation. Throws LimitExceeded past kMaxBruteForceAssignments or the
// exact-evaluation edge caps.
OracleReport brute_force_opt(const Graph& g, CascadeModel model, const VertexSet& i1,
                             const VertexSet& i2, std::size_t k);

struct RatioCheck {
  bool holds = false;
  double achieved = 0.0;  // smallest algorithm value involved
  double opt = 0.0;

  explicit operator bool() const { return holds; }
};

// max{Φ(Cover), Φ(∅, ∅)} >= (1 - 1/e)/2 · OPT. Cover runs on the enumerated
// realizations so no sampling error enters; both sides use exact evaluation.
RatioCheck check_cover_ratio(const Graph& g, CascadeModel model, const VertexSet& i1,
                             const VertexSet& i2, std::size_t k);

// Hedge and Common both reach (1 - 1/e)/2 · OPT in the correlated model.
// Throws std::invalid_argument for odd k or a graph with p1 != p2.
RatioCheck check_hedge_common_ratio(const Graph& g, const VertexSet& i1, const VertexSet& i2,
                                    std::size_t k);

// Some S' ⊆ S1 ∪ S2 with |S'| = (|S1| + |S2|)/2 has Φ(S', S') >= Φ(S1, S2)/2
// in the correlated model. Throws std::invalid_argument for odd |S1| + |S2|.
bool check_halving_lemma(const Graph& g, const VertexSet& i1, const VertexSet& i2,
                         const VertexSet& s1, const VertexSet& s2);
// Same, reusing an evaluator built for g.
bool check_halving_lemma(const ExactEvaluator& exact, const VertexSet& i1, const VertexSet& i2,
                         const VertexSet& s1, const VertexSet& s2);

// Random tiny instance for the property sweeps.
struct SmallInstance {
  Graph graph;
  CascadeModel model = CascadeModel::kCorrelated;
  VertexSet i1;
  VertexSet i2;
  std::size_t k = 0;
};

struct SmallInstanceShape {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 8;
  std::size_t min_k = 1;
  std::size_t max_k = 4;
  bool even_k = false;
  CascadeModel model = CascadeModel::kCorrelated;
  // Probabilities are uniform in [min_probability, max_probability], except
  // that an edge is certain (p = 1) with probability certain_fraction.
  double min_probability = 0.1;
  double max_probability = 0.9;
  double certain_fraction = 0.15;
};

SmallInstance random_small_instance(Rng& rng, const SmallInstanceShape& shape);

// Outcome of one property sweep.
struct SweepSummary {
  std::string name;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double seconds = 0.0;
  std::string first_violation;

  bool passed() const { return violations == 0; }
};

// Ω monotonicity and submodularity on sampled ensembles over random graphs.
// Monotonicity is checked for every assignment with |S1| + |S2| <= max_set_size
// and every element; submodularity on `submodular_checks` random nested pairs
// per graph.
SweepSummary sweep_omega_properties(std::size_t graphs, std::size_t max_set_size,
                                    std::size_t submodular_checks, std::size_t n_worlds,
                                    std::uint64_t seed);
SweepSummary sweep_cover_ratio(std::size_t instances, std::uint64_t seed);
SweepSummary sweep_hedge_common_ratio(std::size_t instances, std::uint64_t seed);
// Halving check for every assignment with |S1| + |S2| in budgets.
SweepSummary sweep_halving_lemma(std::size_t instances, const std::vector<std::size_t>& budgets,
                                 std::uint64_t seed);
// Zero expected imbalance on the reduced instance iff the set-cover instance
// is k-coverable, over enumerate_set_cover_instances(max_universe, max_sets, max_k).
SweepSummary sweep_reduction(std::size_t max_universe, std::size_t max_sets, std::size_t max_k);

// Samples Φ(I1 ∪ S1, I2 ∪ S2) `trials` times with independent ensembles and
// counts the trials where
// |estimate - exact| > 3 * std_err as violations.
SweepSummary sweep_mc_consistency(const Graph& g, CascadeModel model, const VertexSet& i1,
                                  const VertexSet& i2, const VertexSet& s1, const VertexSet& s2,
                                  std::size_t n_worlds, std::size_t trials, std::uint64_t seed);

}  // namespace balance
