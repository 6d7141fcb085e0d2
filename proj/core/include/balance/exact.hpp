#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/graph.hpp"
#include "balance/objective.hpp"

namespace balance {

// Caps on uncertain edges (0 < p < 1) for exact enumeration: 2^20
// realizations in the correlated model, 2^10 x 2^10 in the heterogeneous one.
inline constexpr std::size_t kExactCorrelatedEdgeLimit = 20;
inline constexpr std::size_t kExactHeterogeneousEdgeLimit = 10;

// Exact expected balanced count by enumerating every live-edge realization
// and weighting it by its probability. Works straight from the graph's edge
// list with its own fixed-point reachability, independent of World and the
// BFS code used by the estimators.
//
// Construction enumerates and stores the realizations once; phi() can then
// be called for many seed assignments.
class ExactEvaluator {
 public:
  // Throws LimitExceeded past the edge caps and std::invalid_argument for the
  // correlated model on a graph failing validate_correlated.
  ExactEvaluator(const Graph& g, CascadeModel model);

  double phi(const SeedAssignment& assign) const;
  // Seeds are the full campaign seed sets (initial and additional).
  double phi(const VertexSet& seeds1, const VertexSet& seeds2) const;

  std::size_t num_vertices() const { return n_; }
  CascadeModel model() const { return model_; }

 private:
  struct Realization {
    double probability;
    std::vector<std::pair<VertexId, VertexId>> live;
  };

  VertexSet closure(const Realization& r, const VertexSet& seeds) const;

  std::size_t n_ = 0;
  CascadeModel model_;
  std::vector<Realization> first_;
  // Empty in the correlated model, where both campaigns share first_.
  std::vector<Realization> second_;
};

double exact_phi(const Graph& g, CascadeModel model, const SeedAssignment& assign);

}  // namespace balance
