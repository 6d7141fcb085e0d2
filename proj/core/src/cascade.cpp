#include "balance/cascade.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "balance/errors.hpp"

namespace balance {

std::string_view to_string(CascadeModel model) {
  return model == CascadeModel::kCorrelated ? "correlated" : "heterogeneous";
}

CascadeModel parse_model(std::string_view text) {
  if (text == "heterogeneous" || text == "h") return CascadeModel::kHeterogeneous;
  if (text == "correlated" || text == "c") return CascadeModel::kCorrelated;
  throw ConfigError("unknown cascade model '" + std::string(text) +
                    "' (expected heterogeneous or correlated)");
}

World::Layer World::make_layer(const Graph& g, std::vector<EdgeId> live) {
  std::sort(live.begin(), live.end());
  Layer l;
  const std::size_t n = g.num_vertices();
  l.offsets.assign(n + 1, 0);
  for (EdgeId e : live) ++l.offsets[g.edge(e).src + 1];
  for (std::size_t v = 0; v < n; ++v) l.offsets[v + 1] += l.offsets[v];
  l.targets.resize(live.size());
  std::vector<std::uint32_t> cursor(l.offsets.begin(), l.offsets.end() - 1);
  for (EdgeId e : live) {
    const Edge& edge = g.edge(e);
    l.targets[cursor[edge.src]++] = edge.dst;
  }
  l.edges = std::move(live);
  return l;
}

World::World(const Graph& g, std::vector<EdgeId> live1, std::vector<EdgeId> live2, bool coupled)
    : first_(make_layer(g, std::move(live1))), coupled_(coupled) {
  if (!coupled_) second_ = make_layer(g, std::move(live2));
}

WorldEnsemble::WorldEnsemble(CascadeModel model, std::uint64_t rng_seed, std::size_t num_vertices,
                             std::vector<World> worlds, std::vector<double> weights)
    : model_(model),
      rng_seed_(rng_seed),
      num_vertices_(num_vertices),
      worlds_(std::move(worlds)),
      weights_(std::move(weights)) {
  if (worlds_.empty()) throw std::invalid_argument("an ensemble needs at least one world");
  if (!weights_.empty() && weights_.size() != worlds_.size()) {
    throw std::invalid_argument("one weight per world required");
  }
}

std::uint64_t WorldEnsemble::fingerprint() const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(model_) ^ mix64(rng_seed_));
  h = mix64(h ^ num_vertices_);
  for (const World& w : worlds_) {
    for (Campaign c : {Campaign::kFirst, Campaign::kSecond}) {
      h = mix64(h ^ (0xa5a5a5a5ULL + w.live_edges(c).size()));
      for (EdgeId e : w.live_edges(c)) h = mix64(h ^ e);
    }
  }
  return h;
}

World sample_world(const Graph& g, CascadeModel model, Rng& rng) {
  std::vector<EdgeId> live1;
  std::vector<EdgeId> live2;
  if (model == CascadeModel::kCorrelated) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.p1 != edge.p2) {
        throw std::invalid_argument("correlated model requires p1 == p2 on every edge");
      }
      if (flip(rng, edge.p1)) live1.push_back(e);
    }
    return World(g, std::move(live1), {}, true);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (flip(rng, edge.p1)) live1.push_back(e);
    if (flip(rng, edge.p2)) live2.push_back(e);
  }
  return World(g, std::move(live1), std::move(live2), false);
}

WorldEnsemble build_ensemble(const Graph& g, CascadeModel model, std::size_t n_worlds,
                             std::uint64_t rng_seed) {
  if (n_worlds == 0) throw std::invalid_argument("n_worlds must be at least 1");
  if (model == CascadeModel::kCorrelated && !validate_correlated(g)) {
    throw std::invalid_argument("correlated model requires p1 == p2 on every edge");
  }
  std::vector<World> worlds;
  worlds.reserve(n_worlds);
  for (std::size_t i = 0; i < n_worlds; ++i) {
    Rng rng(derive_stream_seed(rng_seed, i));
    worlds.push_back(sample_world(g, model, rng));
  }
  return WorldEnsemble(model, rng_seed, g.num_vertices(), std::move(worlds));
}

namespace {

// All realizations of one campaign's coins, as (live edges, probability).
struct Realization {
  std::vector<EdgeId> live;
  double probability;
};

std::vector<Realization> enumerate_campaign(const Graph& g, Campaign c, std::size_t max_uncertain) {
  std::vector<EdgeId> certain;
  std::vector<EdgeId> uncertain;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const double p = g.edge(e).probability(c);
    if (p >= 1.0) {
      certain.push_back(e);
    } else if (p > 0.0) {
      uncertain.push_back(e);
    }
  }
  if (uncertain.size() > max_uncertain) {
    throw LimitExceeded("exact enumeration over " + std::to_string(uncertain.size()) +
                        " uncertain edges exceeds the limit of " + std::to_string(max_uncertain));
  }
  std::vector<Realization> out;
  const std::uint64_t masks = std::uint64_t{1} << uncertain.size();
  out.reserve(masks);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Realization r{certain, 1.0};
    for (std::size_t j = 0; j < uncertain.size(); ++j) {
      const double p = g.edge(uncertain[j]).probability(c);
      if ((mask >> j) & 1U) {
        r.live.push_back(uncertain[j]);
        r.probability *= p;
      } else {
        r.probability *= 1.0 - p;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

WorldEnsemble enumerate_worlds(const Graph& g, CascadeModel model, std::size_t max_uncertain_edges) {
  std::vector<World> worlds;
  std::vector<double> weights;
  if (model == CascadeModel::kCorrelated) {
    if (!validate_correlated(g)) {
      throw std::invalid_argument("correlated model requires p1 == p2 on every edge");
    }
    for (auto& r : enumerate_campaign(g, Campaign::kFirst, max_uncertain_edges)) {
      worlds.emplace_back(g, std::move(r.live), std::vector<EdgeId>{}, true);
      weights.push_back(r.probability);
    }
  } else {
    const auto first = enumerate_campaign(g, Campaign::kFirst, max_uncertain_edges);
    const auto second = enumerate_campaign(g, Campaign::kSecond, max_uncertain_edges);
    worlds.reserve(first.size() * second.size());
    for (const auto& r1 : first) {
      for (const auto& r2 : second) {
        worlds.emplace_back(g, r1.live, r2.live, false);
        weights.push_back(r1.probability * r2.probability);
      }
    }
  }
  return WorldEnsemble(model, 0, g.num_vertices(), std::move(worlds), std::move(weights));
}

ReachScratch::ReachScratch(std::size_t num_vertices) : stamp_(num_vertices, 0) {
  queue_.reserve(num_vertices);
}

void ReachScratch::next_epoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
}

std::size_t ReachScratch::explore(const World& w, Campaign c, const VertexSet& blocked,
                                  VertexId start) {
  return explore_many(w, c, blocked, std::span<const VertexId>(&start, 1));
}

std::size_t ReachScratch::explore_many(const World& w, Campaign c, const VertexSet& blocked,
                                       std::span<const VertexId> starts) {
  if (stamp_.size() < blocked.universe()) stamp_.resize(blocked.universe(), 0);
  next_epoch();
  queue_.clear();
  for (VertexId s : starts) {
    if (blocked.contains(s) || stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    queue_.push_back(s);
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (VertexId v : w.live_out(c, queue_[head])) {
      if (stamp_[v] == epoch_ || blocked.contains(v)) continue;
      stamp_[v] = epoch_;
      queue_.push_back(v);
    }
  }
  return queue_.size();
}

VertexSet reach(const World& w, Campaign c, const VertexSet& seeds) {
  VertexSet reached(seeds.universe());
  ReachScratch scratch(seeds.universe());
  const auto starts = seeds.to_vector();
  scratch.explore_many(w, c, reached, starts);
  for (VertexId v : scratch.discovered()) reached.insert(v);
  return reached;
}

VertexSet reach_extend(const World& w, Campaign c, const VertexSet& cached, VertexId extra) {
  VertexSet out = cached;
  ReachScratch scratch(cached.universe());
  scratch.explore(w, c, cached, extra);
  for (VertexId v : scratch.discovered()) out.insert(v);
  return out;
}

}  // namespace balance
