#include "incremental.hpp"

namespace balance::internal {
namespace {

// Sums per-world integer contributions the way the ensemble weighs them:
// exact integer accumulation for sampled ensembles.
class Accumulator {
 public:
  explicit Accumulator(const WorldEnsemble& ens) : ens_(ens) {}
  void add(std::size_t w, std::int64_t d) {
    if (ens_.weighted()) {
      weighted_ += ens_.weight(w) * static_cast<double>(d);
    } else {
      integral_ += d;
    }
  }
  double value() const {
    return ens_.weighted() ? weighted_
                           : static_cast<double>(integral_) / static_cast<double>(ens_.size());
  }

 private:
  const WorldEnsemble& ens_;
  std::int64_t integral_ = 0;
  double weighted_ = 0.0;
};

template <typename PerWorld>
std::vector<double> batch(const WorldEnsemble& ens, std::size_t count, PerWorld&& per_world) {
  std::vector<Accumulator> acc(count, Accumulator(ens));
  for (std::size_t w = 0; w < ens.size(); ++w) {
    for (std::size_t i = 0; i < count; ++i) acc[i].add(w, per_world(w, i));
  }
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = acc[i].value();
  return out;
}

}  // namespace

PhiTracker::PhiTracker(const WorldEnsemble& ens, const VertexSet& seeds1, const VertexSet& seeds2)
    : ens_(ens), scratch1_(ens.num_vertices()), scratch2_(ens.num_vertices()) {
  reached1_.reserve(ens.size());
  reached2_.reserve(ens.size());
  Accumulator acc(ens);
  const auto n = static_cast<std::int64_t>(ens.num_vertices());
  for (std::size_t w = 0; w < ens.size(); ++w) {
    reached1_.push_back(reach(ens[w], Campaign::kFirst, seeds1));
    reached2_.push_back(reach(ens[w], Campaign::kSecond, seeds2));
    acc.add(w, n - static_cast<std::int64_t>(symmetric_difference_size(reached1_[w], reached2_[w])));
  }
  phi_ = acc.value();
}

std::int64_t PhiTracker::world_delta(std::size_t w, std::optional<VertexId> to_first,
                                     std::optional<VertexId> to_second) {
  const World& world = ens_[w];
  const VertexSet& r1 = reached1_[w];
  const VertexSet& r2 = reached2_[w];
  const bool grow1 = to_first && !r1.contains(*to_first);
  const bool grow2 = to_second && !r2.contains(*to_second);
  if (!grow1 && !grow2) return 0;

  // A vertex newly reached by exactly one campaign flips its balance; one
  // newly reached by both was unreached before and stays balanced.
  std::int64_t d = 0;
  if (grow1) scratch1_.explore(world, Campaign::kFirst, r1, *to_first);
  if (grow2) scratch2_.explore(world, Campaign::kSecond, r2, *to_second);
  if (grow1) {
    for (VertexId u : scratch1_.discovered()) {
      if (grow2 && scratch2_.marked(u)) continue;
      d += r2.contains(u) ? 1 : -1;
    }
  }
  if (grow2) {
    for (VertexId u : scratch2_.discovered()) {
      if (grow1 && scratch1_.marked(u)) continue;
      d += r1.contains(u) ? 1 : -1;
    }
  }
  return d;
}

double PhiTracker::delta(std::optional<VertexId> to_first, std::optional<VertexId> to_second) {
  Accumulator acc(ens_);
  for (std::size_t w = 0; w < ens_.size(); ++w) acc.add(w, world_delta(w, to_first, to_second));
  return acc.value();
}

std::vector<double> PhiTracker::single_deltas(Campaign c, std::span<const VertexId> candidates) {
  return batch(ens_, candidates.size(), [&](std::size_t w, std::size_t i) {
    return c == Campaign::kFirst ? world_delta(w, candidates[i], std::nullopt)
                                 : world_delta(w, std::nullopt, candidates[i]);
  });
}

std::vector<double> PhiTracker::common_deltas(std::span<const VertexId> candidates) {
  return batch(ens_, candidates.size(), [&](std::size_t w, std::size_t i) {
    return world_delta(w, candidates[i], candidates[i]);
  });
}

void PhiTracker::commit(std::optional<VertexId> to_first, std::optional<VertexId> to_second) {
  phi_ += delta(to_first, to_second);
  for (std::size_t w = 0; w < ens_.size(); ++w) {
    if (to_first) {
      scratch1_.explore(ens_[w], Campaign::kFirst, reached1_[w], *to_first);
      for (VertexId u : scratch1_.discovered()) reached1_[w].insert(u);
    }
    if (to_second) {
      scratch2_.explore(ens_[w], Campaign::kSecond, reached2_[w], *to_second);
      for (VertexId u : scratch2_.discovered()) reached2_[w].insert(u);
    }
  }
}

OmegaTracker::OmegaTracker(const WorldEnsemble& ens, const VertexSet& i1, const VertexSet& i2)
    : ens_(ens), scratch_(ens.num_vertices()) {
  Accumulator acc(ens);
  const std::size_t n = ens.num_vertices();
  for (std::size_t w = 0; w < ens.size(); ++w) {
    const VertexSet r1 = reach(ens[w], Campaign::kFirst, i1);
    const VertexSet r2 = reach(ens[w], Campaign::kSecond, i2);
    acc.add(w, static_cast<std::int64_t>((r1 & r2).count()));
    only_first_.push_back(r1 - r2);
    only_second_.push_back(r2 - r1);
    from_s1_.emplace_back(n);
    from_s2_.emplace_back(n);
  }
  omega_ = acc.value();
}

std::int64_t OmegaTracker::world_delta(std::size_t w, Campaign c, VertexId v) {
  const bool first = c == Campaign::kFirst;
  const VertexSet& covered = first ? from_s1_[w] : from_s2_[w];
  // S1 balances vertices that only I2 reached, S2 those only I1 reached.
  const VertexSet& target = first ? only_second_[w] : only_first_[w];
  if (covered.contains(v)) return 0;
  scratch_.explore(ens_[w], c, covered, v);
  std::int64_t d = 0;
  for (VertexId u : scratch_.discovered()) d += target.contains(u) ? 1 : 0;
  return d;
}

double OmegaTracker::delta(Campaign c, VertexId v) {
  Accumulator acc(ens_);
  for (std::size_t w = 0; w < ens_.size(); ++w) acc.add(w, world_delta(w, c, v));
  return acc.value();
}

std::vector<double> OmegaTracker::deltas(Campaign c, std::span<const VertexId> candidates) {
  return batch(ens_, candidates.size(),
               [&](std::size_t w, std::size_t i) { return world_delta(w, c, candidates[i]); });
}

void OmegaTracker::commit(Campaign c, VertexId v) {
  omega_ += delta(c, v);
  for (std::size_t w = 0; w < ens_.size(); ++w) {
    VertexSet& covered = c == Campaign::kFirst ? from_s1_[w] : from_s2_[w];
    scratch_.explore(ens_[w], c, covered, v);
    for (VertexId u : scratch_.discovered()) covered.insert(u);
  }
}

ReachTracker::ReachTracker(const WorldEnsemble& ens, Campaign c, const VertexSet& initial)
    : ens_(ens), campaign_(c), scratch_(ens.num_vertices()) {
  Accumulator acc(ens);
  for (std::size_t w = 0; w < ens.size(); ++w) {
    reached_.push_back(reach(ens[w], c, initial));
    acc.add(w, static_cast<std::int64_t>(reached_.back().count()));
  }
  value_ = acc.value();
}

double ReachTracker::delta(VertexId v) {
  Accumulator acc(ens_);
  for (std::size_t w = 0; w < ens_.size(); ++w) {
    acc.add(w, static_cast<std::int64_t>(scratch_.explore(ens_[w], campaign_, reached_[w], v)));
  }
  return acc.value();
}

std::vector<double> ReachTracker::deltas(std::span<const VertexId> candidates) {
  return batch(ens_, candidates.size(), [&](std::size_t w, std::size_t i) {
    return static_cast<std::int64_t>(scratch_.explore(ens_[w], campaign_, reached_[w], candidates[i]));
  });
}

void ReachTracker::commit(VertexId v) {
  value_ += delta(v);
  for (std::size_t w = 0; w < ens_.size(); ++w) {
    scratch_.explore(ens_[w], campaign_, reached_[w], v);
    for (VertexId u : scratch_.discovered()) reached_[w].insert(u);
  }
}

}  // namespace balance::internal
