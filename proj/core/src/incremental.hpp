#pragma once

// Per-world cached reach sets and marginal-gain evaluation shared by the
// greedy loops. Internal to the core library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/vertex_set.hpp"

namespace balance::internal {

// Comparisons between objective values treat differences below this as ties.
// Sampled ensembles move in steps of 1/N, far above it.
inline constexpr double kTieTolerance = 1e-9;

// Tracks r1(I1 ∪ S1) and r2(I2 ∪ S2) in every world and evaluates the change
// in Φ from adding one vertex to S1, one to S2, or both.
class PhiTracker {
 public:
  PhiTracker(const WorldEnsemble& ens, const VertexSet& seeds1, const VertexSet& seeds2);

  double phi() const { return phi_; }

  // Φ change from adding `to_first` to S1 and/or `to_second` to S2.
  double delta(std::optional<VertexId> to_first, std::optional<VertexId> to_second);

  // Φ change for each candidate added to one campaign alone.
  std::vector<double> single_deltas(Campaign c, std::span<const VertexId> candidates);
  // Φ change for each candidate added to both campaigns.
  std::vector<double> common_deltas(std::span<const VertexId> candidates);

  void commit(std::optional<VertexId> to_first, std::optional<VertexId> to_second);

 private:
  // Integer change in the balanced count of world w.
  std::int64_t world_delta(std::size_t w, std::optional<VertexId> to_first,
                           std::optional<VertexId> to_second);
  double finish(std::size_t w, std::int64_t d) const;

  const WorldEnsemble& ens_;
  std::vector<VertexSet> reached1_;
  std::vector<VertexSet> reached2_;
  ReachScratch scratch1_;
  ReachScratch scratch2_;
  double phi_ = 0.0;
};

// Tracks the Ω partition from the initial seeds and r1(S1), r2(S2).
class OmegaTracker {
 public:
  OmegaTracker(const WorldEnsemble& ens, const VertexSet& i1, const VertexSet& i2);

  double omega() const { return omega_; }

  double delta(Campaign c, VertexId v);
  std::vector<double> deltas(Campaign c, std::span<const VertexId> candidates);
  void commit(Campaign c, VertexId v);

 private:
  std::int64_t world_delta(std::size_t w, Campaign c, VertexId v);

  const WorldEnsemble& ens_;
  // Vertices S1 can still balance: r2(I2) \ r1(I1); and likewise for S2.
  std::vector<VertexSet> only_second_;
  std::vector<VertexSet> only_first_;
  std::vector<VertexSet> from_s1_;
  std::vector<VertexSet> from_s2_;
  ReachScratch scratch_;
  double omega_ = 0.0;
};

// Expected reach of a single campaign, r_c(I ∪ S).
class ReachTracker {
 public:
  ReachTracker(const WorldEnsemble& ens, Campaign c, const VertexSet& initial);

  double expected_reach() const { return value_; }
  double delta(VertexId v);
  std::vector<double> deltas(std::span<const VertexId> candidates);
  void commit(VertexId v);

 private:
  const WorldEnsemble& ens_;
  Campaign campaign_;
  std::vector<VertexSet> reached_;
  ReachScratch scratch_;
  double value_ = 0.0;
};

}  // namespace balance::internal
