#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balance/graph.hpp"
#include "balance/objective.hpp"
#include "balance/vertex_set.hpp"

namespace balance::testing {

// 0 -> 1 -> 2, all probabilities 1; I1 = {0}, I2 = {2}.
inline Graph g1() { return Graph({"0", "1", "2"}, {{0, 1, 1.0, 1.0}, {1, 2, 1.0, 1.0}}); }
// 0 -> 1 with p1 = p2 = 0.5; I1 = I2 = {0}.
inline Graph g2() { return Graph({"0", "1"}, {{0, 1, 0.5, 0.5}}); }
// Three isolated vertices; I1 = {0}, I2 = {1}.
inline Graph g3() { return Graph({"0", "1", "2"}, {}); }

inline VertexSet set_of(std::size_t n, std::initializer_list<VertexId> members) {
  return VertexSet(n, members);
}

inline SeedAssignment assignment(std::size_t n, std::initializer_list<VertexId> i1,
                                 std::initializer_list<VertexId> i2,
                                 std::initializer_list<VertexId> s1 = {},
                                 std::initializer_list<VertexId> s2 = {}) {
  SeedAssignment a = SeedAssignment::initial(VertexSet(n, i1), VertexSet(n, i2));
  a.s1 = VertexSet(n, s1);
  a.s2 = VertexSet(n, s2);
  a.k = a.seeds_used();
  return a;
}

// Plain-vector reachability by repeated relaxation over a live mask.
inline std::vector<bool> naive_reach(const Graph& g, const std::vector<bool>& live,
                                     const VertexSet& seeds) {
  std::vector<bool> in(g.num_vertices(), false);
  seeds.for_each([&](VertexId v) { in[v] = true; });
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edges()[e];
      if (live[e] && in[edge.src] && !in[edge.dst]) in[edge.dst] = changed = true;
    }
  }
  return in;
}

// Expected balanced count over every coin outcome of every edge, certain
// edges included. Heterogeneous: 4^m joint outcomes; correlated: 2^m.
inline double naive_phi(const Graph& g, bool correlated, const VertexSet& seeds1,
                        const VertexSet& seeds2) {
  const std::size_t m = g.num_edges();
  const std::uint64_t outcomes = std::uint64_t{1} << m;
  const auto probability = [&](std::uint64_t mask, bool first) {
    double p = 1.0;
    for (std::size_t e = 0; e < m; ++e) {
      const double pe = first ? g.edges()[e].p1 : g.edges()[e].p2;
      p *= (mask >> e & 1) ? pe : 1.0 - pe;
    }
    return p;
  };
  const auto live_of = [&](std::uint64_t mask) {
    std::vector<bool> live(m);
    for (std::size_t e = 0; e < m; ++e) live[e] = (mask >> e & 1) != 0;
    return live;
  };
  const auto balanced = [&](const std::vector<bool>& r1, const std::vector<bool>& r2) {
    double count = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) count += r1[v] == r2[v] ? 1 : 0;
    return count;
  };
  double total = 0.0;
  for (std::uint64_t a = 0; a < outcomes; ++a) {
    const double pa = probability(a, true);
    if (pa == 0.0) continue;
    const auto r1 = naive_reach(g, live_of(a), seeds1);
    if (correlated) {
      total += pa * balanced(r1, naive_reach(g, live_of(a), seeds2));
      continue;
    }
    for (std::uint64_t b = 0; b < outcomes; ++b) {
      const double pb = probability(b, false);
      if (pb == 0.0) continue;
      total += pa * pb * balanced(r1, naive_reach(g, live_of(b), seeds2));
    }
  }
  return total;
}

}  // namespace balance::testing
