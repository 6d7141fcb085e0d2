#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "balance/cascade.hpp"
#include "balance/ensemble_cache.hpp"
#include "balance/errors.hpp"
#include "balance/rng.hpp"
#include "support.hpp"

namespace balance {
namespace {

using testing::set_of;

Graph random_graph(std::uint64_t seed, std::size_t n, double density, bool correlated) {
  Rng rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.intern(std::to_string(i));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || uniform01(rng) >= density) continue;
      const double p1 = uniform01(rng);
      b.add_edge(u, v, p1, correlated ? p1 : uniform01(rng));
    }
  }
  return std::move(b).build();
}

TEST(Rng, StreamsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_stream_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_stream_seed(42, 7), derive_stream_seed(42, 7));
  EXPECT_NE(derive_stream_seed(42, 7), derive_stream_seed(43, 7));
}

TEST(Rng, UniformBelowStaysInRangeAndCoversIt) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_below(rng, 7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 850);
}

TEST(Rng, FlipEdgeProbabilities) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_TRUE(flip(rng, 1.0));
    EXPECT_FALSE(flip(rng, 0.0));
  }
}

TEST(SampleWorld, CertainEdgesAlwaysLive) {
  const Graph g = testing::g1();
  Rng rng(11);
  for (CascadeModel model : {CascadeModel::kHeterogeneous, CascadeModel::kCorrelated}) {
    for (int i = 0; i < 20; ++i) {
      const World w = sample_world(g, model, rng);
      EXPECT_EQ(w.live_edges(Campaign::kFirst).size(), 2u);
      EXPECT_EQ(w.live_edges(Campaign::kSecond).size(), 2u);
    }
  }
}

TEST(SampleWorld, ZeroProbabilityEdgesNeverLive) {
  const Graph g({"a", "b", "c"}, {{0, 1, 0.0, 0.0}, {1, 2, 0.0, 0.0}});
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const World w = sample_world(g, CascadeModel::kHeterogeneous, rng);
    EXPECT_TRUE(w.live_edges(Campaign::kFirst).empty());
    EXPECT_TRUE(w.live_edges(Campaign::kSecond).empty());
  }
}

TEST(SampleWorld, CorrelatedOnUnequalGraphThrows) {
  const Graph g({"a", "b"}, {{0, 1, 0.5, 0.4}});
  Rng rng(1);
  EXPECT_THROW(sample_world(g, CascadeModel::kCorrelated, rng), std::invalid_argument);
  EXPECT_THROW(build_ensemble(g, CascadeModel::kCorrelated, 3, 1), std::invalid_argument);
}

TEST(SampleWorld, G2CorrelatedFrequencyWithinThreeSigma) {
  const WorldEnsemble ens = build_ensemble(testing::g2(), CascadeModel::kCorrelated, 10000, 5);
  std::size_t live = 0;
  for (const World& w : ens.worlds()) live += w.live_edges(Campaign::kFirst).size();
  EXPECT_NEAR(static_cast<double>(live) / 10000.0, 0.5, 3.0 * std::sqrt(0.25 / 10000.0));
}

TEST(BuildEnsemble, G1IdenticalWorldsAllLive) {
  const WorldEnsemble ens = build_ensemble(testing::g1(), CascadeModel::kCorrelated, 5, 7);
  ASSERT_EQ(ens.size(), 5u);
  for (const World& w : ens.worlds()) {
    EXPECT_EQ(w.live_edges(Campaign::kFirst).size(), 2u);
    EXPECT_TRUE(w.coupled());
  }
}

TEST(BuildEnsemble, DeterministicInSeed) {
  const Graph g = random_graph(8, 10, 0.3, false);
  const WorldEnsemble a = build_ensemble(g, CascadeModel::kHeterogeneous, 50, 42);
  const WorldEnsemble b = build_ensemble(g, CascadeModel::kHeterogeneous, 50, 42);
  const WorldEnsemble c = build_ensemble(g, CascadeModel::kHeterogeneous, 50, 43);
  EXPECT_EQ(a.fingerprint(), b.fingerprint());
  EXPECT_NE(a.fingerprint(), c.fingerprint());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Campaign cam : {Campaign::kFirst, Campaign::kSecond}) {
      const auto x = a[i].live_edges(cam);
      const auto y = b[i].live_edges(cam);
      EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
    }
  }
}

TEST(BuildEnsemble, WorldIUsesItsOwnStream) {
  const Graph g = random_graph(9, 8, 0.4, false);
  const WorldEnsemble ens = build_ensemble(g, CascadeModel::kHeterogeneous, 10, 77);
  Rng rng(derive_stream_seed(77, 6));
  const World w = sample_world(g, CascadeModel::kHeterogeneous, rng);
  const auto x = w.live_edges(Campaign::kSecond);
  const auto y = ens[6].live_edges(Campaign::kSecond);
  EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
}

TEST(BuildEnsemble, G2HeterogeneousFrequencyWithinThreeSigma) {
  const WorldEnsemble ens = build_ensemble(testing::g2(), CascadeModel::kHeterogeneous, 1000, 1);
  std::size_t live1 = 0;
  std::size_t both = 0;
  for (const World& w : ens.worlds()) {
    live1 += w.live_edges(Campaign::kFirst).size();
    both += w.live_edges(Campaign::kFirst).size() * w.live_edges(Campaign::kSecond).size();
  }
  EXPECT_NEAR(static_cast<double>(live1), 500.0, 47.5);
  // Independent coins: both live in about a quarter of the worlds.
  EXPECT_NEAR(static_cast<double>(both), 250.0, 3.0 * std::sqrt(1000 * 0.25 * 0.75));
}

TEST(Reach, Examples) {
  const WorldEnsemble g1 = build_ensemble(testing::g1(), CascadeModel::kCorrelated, 1, 1);
  EXPECT_TRUE(reach(g1[0], Campaign::kFirst, set_of(3, {0})) == set_of(3, {0, 1, 2}));
  EXPECT_TRUE(reach(g1[0], Campaign::kSecond, set_of(3, {})) == set_of(3, {}));
  const WorldEnsemble g3 = build_ensemble(testing::g3(), CascadeModel::kHeterogeneous, 1, 1);
  EXPECT_TRUE(reach(g3[0], Campaign::kFirst, set_of(3, {2})) == set_of(3, {2}));
}

TEST(ReachExtend, Examples) {
  const WorldEnsemble g1 = build_ensemble(testing::g1(), CascadeModel::kCorrelated, 1, 1);
  const VertexSet cached = reach(g1[0], Campaign::kFirst, set_of(3, {2}));
  EXPECT_TRUE(cached == set_of(3, {2}));
  EXPECT_TRUE(reach_extend(g1[0], Campaign::kFirst, cached, 0) == set_of(3, {0, 1, 2}));
  EXPECT_TRUE(reach_extend(g1[0], Campaign::kFirst, cached, 2) == cached);
  const WorldEnsemble g3 = build_ensemble(testing::g3(), CascadeModel::kHeterogeneous, 1, 1);
  EXPECT_TRUE(reach_extend(g3[0], Campaign::kFirst, set_of(3, {0}), 1) == set_of(3, {0, 1}));
}

TEST(ReachProperties, MonotoneExtensionConsistentAndCoupled) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bool correlated = seed % 2 == 0;
    const Graph g = random_graph(seed, 12, 0.2, correlated);
    const auto model = correlated ? CascadeModel::kCorrelated : CascadeModel::kHeterogeneous;
    const WorldEnsemble ens = build_ensemble(g, model, 20, seed + 100);
    Rng rng(seed);
    for (const World& w : ens.worlds()) {
      VertexSet s(12);
      VertexSet t(12);
      for (VertexId v = 0; v < 12; ++v) {
        if (uniform01(rng) < 0.2) s.insert(v);
        if (s.contains(v) || uniform01(rng) < 0.2) t.insert(v);
      }
      const auto extra = static_cast<VertexId>(uniform_below(rng, 12));
      for (Campaign c : {Campaign::kFirst, Campaign::kSecond}) {
        const VertexSet rs = reach(w, c, s);
        EXPECT_TRUE(s.is_subset_of(rs));
        EXPECT_TRUE(rs.is_subset_of(reach(w, c, t)));
        VertexSet plus = s;
        plus.insert(extra);
        EXPECT_TRUE(reach_extend(w, c, rs, extra) == reach(w, c, plus));
      }
      if (correlated) {
        EXPECT_TRUE(reach(w, Campaign::kFirst, s) == reach(w, Campaign::kSecond, s));
      }
    }
  }
}

TEST(ReachProperties, G2FrequencyConverges) {
  const WorldEnsemble ens = build_ensemble(testing::g2(), CascadeModel::kHeterogeneous, 4000, 3);
  std::size_t hits = 0;
  for (const World& w : ens.worlds()) hits += reach(w, Campaign::kFirst, set_of(2, {0})).contains(1);
  EXPECT_NEAR(static_cast<double>(hits) / 4000.0, 0.5, 3.0 * std::sqrt(0.25 / 4000.0));
}

TEST(EnumerateWorlds, WeightsSumToOneAndMatchRealizations) {
  const Graph g = random_graph(4, 5, 0.3, false);
  for (CascadeModel model : {CascadeModel::kHeterogeneous, CascadeModel::kCorrelated}) {
    const Graph& h = model == CascadeModel::kCorrelated ? random_graph(4, 5, 0.3, true) : g;
    const WorldEnsemble ens = enumerate_worlds(h, model, 10);
    ASSERT_TRUE(ens.weighted());
    double total = 0.0;
    for (std::size_t i = 0; i < ens.size(); ++i) total += ens.weight(i);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(EnumerateWorlds, CertainEdgesAreNotEnumerated) {
  const WorldEnsemble ens = enumerate_worlds(testing::g1(), CascadeModel::kHeterogeneous, 0);
  EXPECT_EQ(ens.size(), 1u);
  EXPECT_DOUBLE_EQ(ens.weight(0), 1.0);
  EXPECT_THROW(enumerate_worlds(testing::g2(), CascadeModel::kCorrelated, 0), LimitExceeded);
}

TEST(EnsembleCache, RoundTripPreservesWorlds) {
  for (CascadeModel model : {CascadeModel::kHeterogeneous, CascadeModel::kCorrelated}) {
    const Graph g = random_graph(21, 9, 0.3, model == CascadeModel::kCorrelated);
    const WorldEnsemble ens = build_ensemble(g, model, 25, 8);
    std::stringstream buf;
    write_ensemble(buf, ens, g);
    const WorldEnsemble back = read_ensemble(buf, g, model, 8, 25);
    EXPECT_EQ(back.fingerprint(), ens.fingerprint());
  }
}

TEST(EnsembleCache, HeaderMismatchIsRejected) {
  const Graph g = random_graph(22, 6, 0.4, true);
  const WorldEnsemble ens = build_ensemble(g, CascadeModel::kCorrelated, 4, 8);
  std::stringstream buf;
  write_ensemble(buf, ens, g);
  const std::string text = buf.str();
  const auto read_with = [&](CascadeModel model, std::uint64_t seed, std::size_t n) {
    std::istringstream in(text);
    return read_ensemble(in, g, model, seed, n);
  };
  EXPECT_NO_THROW(read_with(CascadeModel::kCorrelated, 8, 4));
  EXPECT_THROW(read_with(CascadeModel::kHeterogeneous, 8, 4), InputError);
  EXPECT_THROW(read_with(CascadeModel::kCorrelated, 9, 4), InputError);
  EXPECT_THROW(read_with(CascadeModel::kCorrelated, 8, 5), InputError);
  std::istringstream junk("not an ensemble\n");
  EXPECT_THROW(read_ensemble(junk, g, CascadeModel::kCorrelated, 8, 4), InputError);
}

}  // namespace
}  // namespace balance
