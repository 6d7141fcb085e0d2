#include "balance/objective.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace balance {

SeedAssignment SeedAssignment::initial(VertexSet i1, VertexSet i2, std::size_t k) {
  SeedAssignment a;
  a.s1 = VertexSet(i1.universe());
  a.s2 = VertexSet(i1.universe());
  a.i1 = std::move(i1);
  a.i2 = std::move(i2);
  a.k = k;
  return a;
}

namespace {

struct WorldCounts {
  std::int64_t balanced = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

WorldCounts count_world(const World& w, const SeedAssignment& assign) {
  const std::size_t n = assign.i1.universe();
  const VertexSet from_i1 = reach(w, Campaign::kFirst, assign.i1);
  const VertexSet from_i2 = reach(w, Campaign::kSecond, assign.i2);
  const VertexSet from_s1 = reach(w, Campaign::kFirst, assign.s1);
  const VertexSet from_s2 = reach(w, Campaign::kSecond, assign.s2);

  WorldCounts out;
  out.balanced = static_cast<std::int64_t>(
      n - symmetric_difference_size(from_i1 | from_s1, from_i2 | from_s2));
  out.a = static_cast<std::int64_t>((from_i1 & from_i2).count());
  out.b = static_cast<std::int64_t>(((from_i1 - from_i2) & from_s2).count());
  out.c = static_cast<std::int64_t>(((from_i2 - from_i1) & from_s1).count());
  return out;
}

}  // namespace

ObjectiveBreakdown estimate_phi(const WorldEnsemble& ens, const SeedAssignment& assign) {
  const std::size_t n_worlds = ens.size();
  std::vector<WorldCounts> per_world(n_worlds);
  for (std::size_t i = 0; i < n_worlds; ++i) per_world[i] = count_world(ens[i], assign);

  ObjectiveBreakdown out;
  if (!ens.weighted()) {
    WorldCounts total;
    for (const WorldCounts& wc : per_world) {
      total.balanced += wc.balanced;
      total.a += wc.a;
      total.b += wc.b;
      total.c += wc.c;
    }
    const double denom = static_cast<double>(n_worlds);
    out.phi = static_cast<double>(total.balanced) / denom;
    out.a = static_cast<double>(total.a) / denom;
    out.b = static_cast<double>(total.b) / denom;
    out.c = static_cast<double>(total.c) / denom;
    out.omega = static_cast<double>(total.a + total.b + total.c) / denom;
    out.psi = static_cast<double>(total.balanced - total.a - total.b - total.c) / denom;
    if (n_worlds > 1) {
      double sq = 0.0;
      for (const WorldCounts& wc : per_world) {
        const double d = static_cast<double>(wc.balanced) - out.phi;
        sq += d * d;
      }
      out.std_err = std::sqrt(sq / static_cast<double>(n_worlds - 1)) / std::sqrt(denom);
    }
    return out;
  }

  for (std::size_t i = 0; i < n_worlds; ++i) {
    const double wt = ens.weight(i);
    const WorldCounts& wc = per_world[i];
    out.phi += wt * static_cast<double>(wc.balanced);
    out.a += wt * static_cast<double>(wc.a);
    out.b += wt * static_cast<double>(wc.b);
    out.c += wt * static_cast<double>(wc.c);
    out.omega += wt * static_cast<double>(wc.a + wc.b + wc.c);
    out.psi += wt * static_cast<double>(wc.balanced - wc.a - wc.b - wc.c);
  }
  return out;
}

double estimate_omega(const WorldEnsemble& ens, const SeedAssignment& assign) {
  return estimate_phi(ens, assign).omega;
}

double estimate_psi(const WorldEnsemble& ens, const SeedAssignment& assign) {
  return estimate_phi(ens, assign).psi;
}

}  // namespace balance
