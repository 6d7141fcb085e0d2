#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "balance/graph.hpp"
#include "balance/rng.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

enum class CascadeModel {
  // Independent coins per campaign with probabilities p1(e), p2(e).
  kHeterogeneous,
  // p1(e) == p2(e) and a single shared coin per edge.
  kCorrelated,
};

std::string_view to_string(CascadeModel model);
// Accepts "heterogeneous"/"h" and "correlated"/"c". Throws ConfigError.
CascadeModel parse_model(std::string_view text);

// Live-edge realization of both campaigns. Immutable once built; keeps its
// own out-adjacency over live edges so reachability never touches dead ones.
class World {
 public:
  World() = default;
  // live1/live2 are edge ids of g. With `coupled` set, live2 is ignored and
  // campaign 2 shares campaign 1's edges.
  World(const Graph& g, std::vector<EdgeId> live1, std::vector<EdgeId> live2, bool coupled);

  bool coupled() const { return coupled_; }
  std::size_t num_vertices() const { return layer(Campaign::kFirst).offsets.size() - 1; }

  // Sorted live edge ids for the campaign.
  std::span<const EdgeId> live_edges(Campaign c) const { return layer(c).edges; }

  std::span<const VertexId> live_out(Campaign c, VertexId u) const {
    const Layer& l = layer(c);
    return {l.targets.data() + l.offsets[u], l.targets.data() + l.offsets[u + 1]};
  }

 private:
  struct Layer {
    std::vector<EdgeId> edges;
    std::vector<std::uint32_t> offsets = {0};
    std::vector<VertexId> targets;
  };

  const Layer& layer(Campaign c) const {
    return (c == Campaign::kFirst || coupled_) ? first_ : second_;
  }
  static Layer make_layer(const Graph& g, std::vector<EdgeId> live);

  Layer first_;
  Layer second_;
  bool coupled_ = false;
};

// A fixed set of worlds against which every objective is evaluated. Sampled
// ensembles weigh each world 1/N; enumerated ensembles carry the exact
// probability of each realization.
class WorldEnsemble {
 public:
  WorldEnsemble() = default;
  WorldEnsemble(CascadeModel model, std::uint64_t rng_seed, std::size_t num_vertices,
                std::vector<World> worlds, std::vector<double> weights = {});

  CascadeModel model() const { return model_; }
  std::uint64_t rng_seed() const { return rng_seed_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t size() const { return worlds_.size(); }
  const World& operator[](std::size_t i) const { return worlds_[i]; }
  std::span<const World> worlds() const { return worlds_; }

  // True for enumerated ensembles: weights are realization probabilities and
  // estimates carry no sampling error.
  bool weighted() const { return !weights_.empty(); }
  double weight(std::size_t i) const {
    return weights_.empty() ? 1.0 / static_cast<double>(worlds_.size()) : weights_[i];
  }

  // Hash over model, seed and every live edge; equal iff (with overwhelming
  // probability) the same worlds.
  std::uint64_t fingerprint() const;

 private:
  CascadeModel model_ = CascadeModel::kHeterogeneous;
  std::uint64_t rng_seed_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<World> worlds_;
  std::vector<double> weights_;
};

// Draws one world. Heterogeneous: per edge, the campaign-1 coin then the
// campaign-2 coin from the same stream. Correlated: one coin with p1(e).
// Throws std::invalid_argument for the correlated model on a graph with
// p1 != p2 somewhere.
World sample_world(const Graph& g, CascadeModel model, Rng& rng);

// World i is drawn from its own stream seeded with derive_stream_seed(rng_seed, i).
WorldEnsemble build_ensemble(const Graph& g, CascadeModel model, std::size_t n_worlds,
                             std::uint64_t rng_seed);

// Every realization with non-zero probability, weighted by that probability.
// Edges with p in {0, 1} are fixed; only uncertain edges are enumerated.
// Throws LimitExceeded beyond 2^max_uncertain_edges realizations per campaign.
WorldEnsemble enumerate_worlds(const Graph& g, CascadeModel model, std::size_t max_uncertain_edges);

// Vertices reachable from seeds over the campaign's live edges. Seeds are
// included.
VertexSet reach(const World& w, Campaign c, const VertexSet& seeds);

// reach(w, c, S ∪ {extra}) given cached == reach(w, c, S). Only explores
// vertices outside cached.
VertexSet reach_extend(const World& w, Campaign c, const VertexSet& cached, VertexId extra);

// Reusable BFS workspace for the incremental routines used by greedy loops.
class ReachScratch {
 public:
  explicit ReachScratch(std::size_t num_vertices = 0);

  // Collects into `discovered()` the vertices reachable from `start` that are
  // not in `blocked`, without modifying blocked. Returns their count; zero
  // when start itself is blocked.
  std::size_t explore(const World& w, Campaign c, const VertexSet& blocked, VertexId start);

  // Like explore, for several start vertices at once.
  std::size_t explore_many(const World& w, Campaign c, const VertexSet& blocked,
                           std::span<const VertexId> starts);

  std::span<const VertexId> discovered() const { return queue_; }
  // True when v was discovered by the most recent explore call.
  bool marked(VertexId v) const { return stamp_[v] == epoch_; }

 private:
  void next_epoch();

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> queue_;
};

}  // namespace balance
