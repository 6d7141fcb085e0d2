#pragma once

#include <cstddef>

#include "balance/cascade.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

// Initial seeds (fixed input) and additional seeds (chosen under budget k).
struct SeedAssignment {
  VertexSet i1;
  VertexSet i2;
  VertexSet s1;
  VertexSet s2;
  std::size_t k = 0;

  // Empty s1, s2 over the universe of i1.
  static SeedAssignment initial(VertexSet i1, VertexSet i2, std::size_t k = 0);

  std::size_t seeds_used() const { return s1.count() + s2.count(); }
  bool within_budget() const { return seeds_used() <= k; }
  VertexSet seeds1() const { return i1 | s1; }
  VertexSet seeds2() const { return i2 | s2; }
};

// Expected balanced-vertex count and its split over X (reached from the
// initial seeds of either campaign) and Y (everything else). X and Y come
// from the assignment's own i1, i2, never from s1, s2.
//
//   phi   = E[n - |r1(I1 ∪ S1) △ r2(I2 ∪ S2)|]
//   omega = E[|A| + |B| + |C|]  (balanced vertices inside X)
//   psi   = phi - omega          (balanced vertices inside Y)
//   A = r1(I1) ∩ r2(I2)
//   B = (r1(I1) \ r2(I2)) ∩ r2(S2)
//   C = (r2(I2) \ r1(I1)) ∩ r1(S1)
struct ObjectiveBreakdown {
  double phi = 0.0;
  double omega = 0.0;
  double psi = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  // Monte Carlo standard error of phi; zero for enumerated ensembles.
  double std_err = 0.0;
};

ObjectiveBreakdown estimate_phi(const WorldEnsemble& ens, const SeedAssignment& assign);
double estimate_omega(const WorldEnsemble& ens, const SeedAssignment& assign);
double estimate_psi(const WorldEnsemble& ens, const SeedAssignment& assign);

}  // namespace balance
