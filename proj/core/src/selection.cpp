#include "balance/selection.hpp"

#include <algorithm>
#include <queue>

#include "incremental.hpp"

namespace balance {

using internal::kTieTolerance;

std::string describe(const SeedOption& option, const Graph* g) {
  const auto label = [&](const std::optional<VertexId>& v) -> std::string {
    if (!v) return "-";
    return g != nullptr ? g->name(*v) : std::to_string(*v);
  };
  return "<" + label(option.to_first) + "," + label(option.to_second) + ">";
}

namespace {

SelectionResult finish(std::string name, const WorldEnsemble& ens, const VertexSet& i1,
                       const VertexSet& i2, VertexSet s1, VertexSet s2, std::size_t k,
                       std::vector<TraceStep> trace, bool heuristic) {
  SelectionResult result;
  result.algorithm = std::move(name);
  SeedAssignment assign = SeedAssignment::initial(i1, i2, k);
  assign.s1 = s1;
  assign.s2 = s2;
  result.final = estimate_phi(ens, assign);
  result.s1 = std::move(s1);
  result.s2 = std::move(s2);
  result.trace = std::move(trace);
  result.heuristic = heuristic;
  return result;
}

struct Pick {
  VertexId vertex;
  double delta;
};

// Largest delta; ties within tolerance go to the earliest candidate, and
// candidate lists are always in ascending id order.
std::optional<Pick> best_of(std::span<const VertexId> candidates, std::span<const double> deltas) {
  std::optional<Pick> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!best || deltas[i] > best->delta + kTieTolerance) best = Pick{candidates[i], deltas[i]};
  }
  return best;
}

std::vector<VertexId> vertices_where(std::size_t n, auto&& keep) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (keep(v)) out.push_back(v);
  }
  return out;
}

// Shared loop behind Common (restricted cross pools, no pair option) and
// Hedge (unrestricted pools, pair option).
SelectionResult option_greedy(std::string name, const WorldEnsemble& ens, const VertexSet& i1,
                              const VertexSet& i2, std::size_t k, bool restricted, bool with_pair) {
  const std::size_t n = ens.num_vertices();
  internal::PhiTracker tracker(ens, i1, i2);
  VertexSet s1(n);
  VertexSet s2(n);
  std::vector<TraceStep> trace;
  std::size_t used = 0;

  while (used < k) {
    const std::size_t remaining = k - used;
    struct Candidate {
      SeedOption option;
      double delta;
      std::size_t cost;
    };
    std::optional<Candidate> best;
    // Equal Φ goes to the cheaper option. Calls come in priority order, so an
    // equal later option of the same cost never displaces an earlier one.
    const auto consider = [&](SeedOption option, double delta, std::size_t cost) {
      if (!best || delta > best->delta + kTieTolerance ||
          (delta >= best->delta - kTieTolerance && cost < best->cost)) {
        best = Candidate{option, delta, cost};
      }
    };

    const auto common_pool = vertices_where(n, [&](VertexId v) {
      const std::size_t cost = (s1.contains(v) ? 0 : 1) + (s2.contains(v) ? 0 : 1);
      return cost >= 1 && cost <= remaining;
    });
    if (const auto c = best_of(common_pool, tracker.common_deltas(common_pool))) {
      const std::size_t cost = (s1.contains(c->vertex) ? 0 : 1) + (s2.contains(c->vertex) ? 0 : 1);
      consider(SeedOption::common(c->vertex), c->delta, cost);
    }

    // Seeds for S2 come from I1 (Common) and seeds for S1 from I2.
    const auto to_second_pool = vertices_where(
        n, [&](VertexId v) { return !s2.contains(v) && (!restricted || i1.contains(v)); });
    const auto to_first_pool = vertices_where(
        n, [&](VertexId v) { return !s1.contains(v) && (!restricted || i2.contains(v)); });
    const auto into_second =
        best_of(to_second_pool, tracker.single_deltas(Campaign::kSecond, to_second_pool));
    const auto into_first =
        best_of(to_first_pool, tracker.single_deltas(Campaign::kFirst, to_first_pool));
    if (into_second) consider(SeedOption::second(into_second->vertex), into_second->delta, 1);
    if (into_first) consider(SeedOption::first(into_first->vertex), into_first->delta, 1);
    if (with_pair && remaining >= 2 && into_first && into_second) {
      consider(SeedOption::pair(into_first->vertex, into_second->vertex),
               tracker.delta(into_first->vertex, into_second->vertex), 2);
    }

    if (!best || best->delta <= kTieTolerance) break;
    const SeedOption& option = best->option;
    tracker.commit(option.to_first, option.to_second);
    if (option.to_first && s1.insert(*option.to_first)) ++used;
    if (option.to_second && s2.insert(*option.to_second)) ++used;
    trace.push_back({trace.size() + 1, option, tracker.phi()});
  }

  const bool heuristic = ens.model() != CascadeModel::kCorrelated || k % 2 != 0;
  return finish(std::move(name), ens, i1, i2, std::move(s1), std::move(s2), k, std::move(trace),
                heuristic);
}

}  // namespace

SelectionResult run_cover(const WorldEnsemble& ens, const Graph& /*g*/, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k) {
  const std::size_t n = ens.num_vertices();
  internal::OmegaTracker tracker(ens, i1, i2);

  struct Entry {
    double gain;
    VertexId vertex;
    Campaign campaign;
    std::size_t round;
  };
  // Top of the heap: largest gain, then lowest id, then campaign 1.
  const auto after = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.vertex != b.vertex) return a.vertex > b.vertex;
    return a.campaign == Campaign::kSecond && b.campaign == Campaign::kFirst;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(after)> heap(after);

  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  for (Campaign c : {Campaign::kFirst, Campaign::kSecond}) {
    const auto gains = tracker.deltas(c, all);
    for (VertexId v = 0; v < n; ++v) heap.push(Entry{gains[v], v, c, 0});
  }

  VertexSet s1(n);
  VertexSet s2(n);
  std::vector<TraceStep> trace;
  std::size_t picks = 0;
  while (picks < k && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.round != picks) {
      top.gain = tracker.delta(top.campaign, top.vertex);
      top.round = picks;
      heap.push(top);
      continue;
    }
    tracker.commit(top.campaign, top.vertex);
    SeedOption option;
    if (top.campaign == Campaign::kFirst) {
      s1.insert(top.vertex);
      option = SeedOption::first(top.vertex);
    } else {
      s2.insert(top.vertex);
      option = SeedOption::second(top.vertex);
    }
    ++picks;
    trace.push_back({picks, option, tracker.omega()});
  }

  // Keep the greedy sets unless the empty assignment is strictly better.
  SeedAssignment chosen = SeedAssignment::initial(i1, i2, k);
  chosen.s1 = s1;
  chosen.s2 = s2;
  const double phi_greedy = estimate_phi(ens, chosen).phi;
  const double phi_empty = estimate_phi(ens, SeedAssignment::initial(i1, i2, k)).phi;
  if (phi_empty > phi_greedy + kTieTolerance) {
    s1.clear();
    s2.clear();
  }
  return finish("cover", ens, i1, i2, std::move(s1), std::move(s2), k, std::move(trace), false);
}

SelectionResult run_common(const WorldEnsemble& ens, const Graph& /*g*/, const VertexSet& i1,
                           const VertexSet& i2, std::size_t k) {
  return option_greedy("common", ens, i1, i2, k, /*restricted=*/true, /*with_pair=*/false);
}

SelectionResult run_hedge(const WorldEnsemble& ens, const Graph& /*g*/, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k) {
  return option_greedy("hedge", ens, i1, i2, k, /*restricted=*/false, /*with_pair=*/true);
}

SelectionResult run_greedy_phi(const WorldEnsemble& ens, const Graph& /*g*/, const VertexSet& i1,
                               const VertexSet& i2, std::size_t k) {
  const std::size_t n = ens.num_vertices();
  internal::PhiTracker tracker(ens, i1, i2);
  VertexSet s1(n);
  VertexSet s2(n);
  std::vector<TraceStep> trace;
  while (s1.count() + s2.count() < k) {
    const auto pool1 = vertices_where(n, [&](VertexId v) { return !s1.contains(v); });
    const auto pool2 = vertices_where(n, [&](VertexId v) { return !s2.contains(v); });
    const auto d1 = tracker.single_deltas(Campaign::kFirst, pool1);
    const auto d2 = tracker.single_deltas(Campaign::kSecond, pool2);

    // Walk both pools in (vertex, campaign) order for the tie-break.
    std::optional<SeedOption> best;
    double best_delta = 0.0;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < pool1.size() || b < pool2.size()) {
      const bool take_first = b == pool2.size() || (a < pool1.size() && pool1[a] <= pool2[b]);
      const SeedOption option =
          take_first ? SeedOption::first(pool1[a]) : SeedOption::second(pool2[b]);
      const double delta = take_first ? d1[a++] : d2[b++];
      if (!best || delta > best_delta + kTieTolerance) {
        best = option;
        best_delta = delta;
      }
    }
    if (!best || best_delta <= kTieTolerance) break;
    tracker.commit(best->to_first, best->to_second);
    if (best->to_first) s1.insert(*best->to_first);
    if (best->to_second) s2.insert(*best->to_second);
    trace.push_back({trace.size() + 1, *best, tracker.phi()});
  }
  return finish("greedy", ens, i1, i2, std::move(s1), std::move(s2), k, std::move(trace), true);
}

}  // namespace balance
