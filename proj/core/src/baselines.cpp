#include "balance/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "balance/rng.hpp"
#include "incremental.hpp"

namespace balance {

using internal::kTieTolerance;

std::size_t default_list_length(std::size_t k) { return std::max<std::size_t>(2 * k, 50); }

namespace {

SelectionResult scored(std::string name, const WorldEnsemble& ens, const VertexSet& i1,
                       const VertexSet& i2, std::size_t k, VertexSet s1, VertexSet s2,
                       std::vector<TraceStep> trace = {}) {
  SelectionResult result;
  result.algorithm = std::move(name);
  SeedAssignment assign = SeedAssignment::initial(i1, i2, k);
  assign.s1 = s1;
  assign.s2 = s2;
  result.final = estimate_phi(ens, assign);
  result.s1 = std::move(s1);
  result.s2 = std::move(s2);
  result.trace = std::move(trace);
  result.heuristic = true;
  return result;
}

}  // namespace

SelectionResult run_bblo(const WorldEnsemble& ens, const Graph& /*g*/, const VertexSet& i1,
                         const VertexSet& i2, std::size_t k) {
  const std::size_t n = ens.num_vertices();
  const std::size_t quota1 = std::min(n, (k + 1) / 2);
  const std::size_t quota2 = std::min(n, k / 2);
  internal::PhiTracker tracker(ens, i1, i2);
  VertexSet s1(n);
  VertexSet s2(n);
  std::vector<TraceStep> trace;

  const auto best_response = [&](Campaign c, const VertexSet& own) {
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < n; ++v) {
      if (!own.contains(v)) pool.push_back(v);
    }
    const auto deltas = tracker.single_deltas(c, pool);
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (deltas[i] > deltas[best] + kTieTolerance) best = i;
    }
    return pool[best];
  };

  while (s1.count() < quota1 || s2.count() < quota2) {
    if (s1.count() < quota1) {
      const VertexId v = best_response(Campaign::kFirst, s1);
      tracker.commit(v, std::nullopt);
      s1.insert(v);
      trace.push_back({trace.size() + 1, SeedOption::first(v), tracker.phi()});
    }
    if (s2.count() < quota2) {
      const VertexId w = best_response(Campaign::kSecond, s2);
      tracker.commit(std::nullopt, w);
      s2.insert(w);
      trace.push_back({trace.size() + 1, SeedOption::second(w), tracker.phi()});
    }
  }
  return scored("bblo", ens, i1, i2, k, std::move(s1), std::move(s2), std::move(trace));
}

std::vector<VertexId> infmax_greedy(const WorldEnsemble& ens, const Graph& /*g*/, Campaign campaign,
                                    const VertexSet& initial, std::size_t length) {
  const std::size_t n = ens.num_vertices();
  length = std::min(length, n);
  internal::ReachTracker tracker(ens, campaign, initial);

  struct Entry {
    double gain;
    VertexId vertex;
    std::size_t round;
  };
  const auto after = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.vertex > b.vertex;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(after)> heap(after);
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  const auto gains = tracker.deltas(all);
  for (VertexId v = 0; v < n; ++v) heap.push(Entry{gains[v], v, 0});

  std::vector<VertexId> order;
  order.reserve(length);
  while (order.size() < length && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.round != order.size()) {
      top.gain = tracker.delta(top.vertex);
      top.round = order.size();
      heap.push(top);
      continue;
    }
    tracker.commit(top.vertex);
    order.push_back(top.vertex);
  }
  return order;
}

std::vector<VertexId> union_prefix(std::span<const VertexId> first, std::span<const VertexId> second,
                                   std::size_t count) {
  std::vector<VertexId> out;
  const auto take = [&](VertexId v) {
    if (out.size() < count && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (std::size_t i = 0; i < std::max(first.size(), second.size()) && out.size() < count; ++i) {
    if (i < first.size()) take(first[i]);
    if (i < second.size()) take(second[i]);
  }
  return out;
}

std::vector<VertexId> intersection_prefix(std::span<const VertexId> first,
                                          std::span<const VertexId> second, std::size_t count) {
  std::vector<VertexId> out;
  for (VertexId v : first) {
    if (out.size() == count) break;
    if (std::find(second.begin(), second.end(), v) != second.end()) out.push_back(v);
  }
  if (out.size() < count) {
    const auto padding = union_prefix(first, second, first.size() + second.size());
    for (VertexId v : padding) {
      if (out.size() == count) break;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

namespace {

SelectionResult common_list_method(std::string name, const WorldEnsemble& ens, const Graph& g,
                                   const VertexSet& i1, const VertexSet& i2, std::size_t k,
                                   std::size_t length, bool intersect) {
  const std::size_t n = ens.num_vertices();
  if (length < std::min(k, n)) {
    throw std::invalid_argument("candidate list length must be at least min(k, n)");
  }
  const auto list1 = infmax_greedy(ens, g, Campaign::kFirst, i1, length);
  const auto list2 = infmax_greedy(ens, g, Campaign::kSecond, i2, length);
  const std::size_t half = k / 2;
  const auto chosen =
      intersect ? intersection_prefix(list1, list2, half) : union_prefix(list1, list2, half);
  VertexSet s(n, chosen);
  return scored(std::move(name), ens, i1, i2, k, s, s);
}

}  // namespace

SelectionResult run_union(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                          const VertexSet& i2, std::size_t k, std::size_t length) {
  return common_list_method("union", ens, g, i1, i2, k, length, false);
}

SelectionResult run_intersection(const WorldEnsemble& ens, const Graph& g, const VertexSet& i1,
                                 const VertexSet& i2, std::size_t k, std::size_t length) {
  return common_list_method("intersection", ens, g, i1, i2, k, length, true);
}

SelectionResult run_high_degree(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.out_degree(a) > g.out_degree(b);
  });
  SelectionResult result;
  result.algorithm = "highdegree";
  result.s1 = VertexSet(n);
  result.s2 = VertexSet(n);
  result.heuristic = true;
  for (std::size_t i = 0; i < std::min(k, n); ++i) {
    (i % 2 == 0 ? result.s1 : result.s2).insert(order[i]);
  }
  return result;
}

SelectionResult run_random(const Graph& g, std::size_t k, std::uint64_t rng_seed) {
  const std::size_t n = g.num_vertices();
  if (k > 2 * n) throw std::invalid_argument("random baseline needs k <= 2n");
  SelectionResult result;
  result.algorithm = "random";
  result.heuristic = true;
  const auto draw = [&](std::uint64_t stream) {
    // Partial Fisher-Yates over the vertex ids.
    Rng rng(derive_stream_seed(rng_seed, stream));
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    VertexSet out(n);
    for (std::size_t i = 0; i < k / 2; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
      std::swap(ids[i], ids[j]);
      out.insert(ids[i]);
    }
    return out;
  };
  result.s1 = draw(1);
  result.s2 = draw(2);
  return result;
}

}  // namespace balance
