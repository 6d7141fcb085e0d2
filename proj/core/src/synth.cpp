#include "balance/synth.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "balance/config.hpp"
#include "balance/errors.hpp"
#include "balance/graph_io.hpp"
#include "balance/rng.hpp"

namespace balance {
namespace {

std::uint64_t edge_key(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

double draw_between(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

// `count` distinct members of [first, first + size) in draw order.
std::vector<VertexId> distinct_sample(Rng& rng, VertexId first, std::size_t size,
                                      std::size_t count) {
  std::vector<VertexId> pool(size);
  std::iota(pool.begin(), pool.end(), first);
  count = std::min(count, size);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + uniform_below(rng, size - i)]);
  }
  pool.resize(count);
  return pool;
}

void check_common(const SynthParams& p) {
  if (p.n < 2) throw ConfigError("synth: n must be at least 2");
  if (!(p.min_probability >= 0.0 && p.min_probability <= p.max_probability &&
        p.max_probability <= 1.0)) {
    throw ConfigError("synth: need 0 <= min_probability <= max_probability <= 1");
  }
  if (p.seeds_per_side == 0) throw ConfigError("synth: seeds_per_side must be positive");
}

SyntheticInstance two_community(const SynthParams& p) {
  check_common(p);
  if (!(p.cross_fraction >= 0.0 && p.cross_fraction <= 1.0)) {
    throw ConfigError("synth: cross_fraction must lie in [0, 1]");
  }
  if (!(p.away_factor >= 0.0 && p.away_factor <= 1.0)) {
    throw ConfigError("synth: away_factor must lie in [0, 1]");
  }
  const std::size_t half_a = p.n / 2;
  const std::size_t half_b = p.n - half_a;
  const std::size_t m = p.edges == 0 ? 5 * p.n : p.edges;
  const std::size_t intra_capacity = half_a * (half_a - 1) + half_b * (half_b - 1);
  if (m > intra_capacity / 2) {
    throw ConfigError("synth: too many edges for n = " + std::to_string(p.n));
  }

  Rng rng(p.seed);
  std::vector<std::string> names;
  names.reserve(p.n);
  for (std::size_t i = 0; i < half_a; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < half_b; ++i) names.push_back("b" + std::to_string(i));

  const auto side_of = [&](VertexId v) { return v < half_a ? 0 : 1; };
  const auto pick_in = [&](int side, bool skewed) {
    const std::size_t first = side == 0 ? 0 : half_a;
    const std::size_t size = side == 0 ? half_a : half_b;
    const double u = uniform01(rng);
    const auto offset = static_cast<std::size_t>((skewed ? u * u : u) * static_cast<double>(size));
    return static_cast<VertexId>(first + std::min(offset, size - 1));
  };

  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const int side = uniform01(rng) < 0.5 ? 0 : 1;
    const VertexId u = pick_in(side, true);
    const bool cross = uniform01(rng) < p.cross_fraction;
    const VertexId v = pick_in(cross ? 1 - side : side, false);
    const double base = draw_between(rng, p.min_probability, p.max_probability);
    if (u == v || !seen.insert(edge_key(u, v)).second) continue;
    double p1 = base;
    double p2 = base;
    if (p.model == CascadeModel::kHeterogeneous) {
      if (cross) {
        p1 = p2 = base * p.away_factor;
      } else if (side_of(u) == 0) {
        p2 = base * p.away_factor;
      } else {
        p1 = base * p.away_factor;
      }
    }
    edges.push_back(Edge{u, v, p1, p2});
  }

  SyntheticInstance inst;
  inst.graph = Graph(std::move(names), std::move(edges));
  inst.i1 = inst.graph.empty_set();
  inst.i2 = inst.graph.empty_set();
  for (VertexId v : distinct_sample(rng, 0, half_a, p.seeds_per_side)) inst.i1.insert(v);
  for (VertexId v : distinct_sample(rng, static_cast<VertexId>(half_a), half_b, p.seeds_per_side)) {
    inst.i2.insert(v);
  }
  return inst;
}

SyntheticInstance random_dag(const SynthParams& p) {
  check_common(p);
  const std::size_t capacity = p.n * (p.n - 1) / 2;
  const std::size_t m = p.edges == 0 ? std::min(2 * p.n, capacity) : p.edges;
  if (m > capacity) throw ConfigError("synth: a DAG on n = " + std::to_string(p.n) +
                                      " vertices has at most " + std::to_string(capacity) +
                                      " edges");
  Rng rng(p.seed);
  const std::vector<VertexId> order = distinct_sample(rng, 0, p.n, p.n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.n; ++i) names.push_back("v" + std::to_string(i));

  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  while (edges.size() < m) {
    auto a = static_cast<std::size_t>(uniform_below(rng, p.n));
    auto b = static_cast<std::size_t>(uniform_below(rng, p.n));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const VertexId u = order[a];
    const VertexId v = order[b];
    if (!seen.insert(edge_key(u, v)).second) continue;
    const double p1 = draw_between(rng, p.min_probability, p.max_probability);
    const double p2 = p.model == CascadeModel::kCorrelated
                          ? p1
                          : draw_between(rng, p.min_probability, p.max_probability);
    edges.push_back(Edge{u, v, p1, p2});
  }

  SyntheticInstance inst;
  inst.graph = Graph(std::move(names), std::move(edges));
  inst.i1 = inst.graph.empty_set();
  inst.i2 = inst.graph.empty_set();
  for (VertexId v : distinct_sample(rng, 0, p.n, p.seeds_per_side)) inst.i1.insert(v);
  for (VertexId v : distinct_sample(rng, 0, p.n, p.seeds_per_side)) inst.i2.insert(v);
  return inst;
}

}  // namespace

std::string_view to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::kTwoCommunity: return "two-community";
    case SynthKind::kRandomDag: return "random-dag";
    case SynthKind::kSetCoverReduction: return "set-cover-reduction";
  }
  return "?";
}

SynthKind parse_synth_kind(std::string_view text) {
  if (text == "two-community") return SynthKind::kTwoCommunity;
  if (text == "random-dag") return SynthKind::kRandomDag;
  if (text == "set-cover-reduction") return SynthKind::kSetCoverReduction;
  throw ConfigError("unknown synthetic kind '" + std::string(text) +
                    "' (expected two-community, random-dag or set-cover-reduction)");
}

SyntheticInstance generate_synthetic(const SynthParams& params) {
  switch (params.kind) {
    case SynthKind::kTwoCommunity: return two_community(params);
    case SynthKind::kRandomDag: return random_dag(params);
    case SynthKind::kSetCoverReduction: {
      if (params.set_cover.sets.empty() || params.set_cover.k == 0) {
        throw ConfigError("synth: set-cover-reduction needs a set-cover instance with k >= 1");
      }
      ReducedInstance reduced = reduction_from_set_cover(params.set_cover);
      return {std::move(reduced.graph), std::move(reduced.i1), std::move(reduced.i2),
              reduced.budget};
    }
  }
  throw ConfigError("unknown synthetic kind");
}

void write_synthetic(const SyntheticInstance& inst, const std::filesystem::path& graph_path,
                     const std::filesystem::path& seeds_path) {
  save_edge_list(graph_path, inst.graph);
  save_seeds(seeds_path, inst.graph, inst.i1, inst.i2);
}

}  // namespace balance
