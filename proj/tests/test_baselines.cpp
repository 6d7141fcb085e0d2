#include <gtest/gtest.h>

#include "balance/baselines.hpp"
#include "balance/cascade.hpp"
#include "balance/rng.hpp"
#include "support.hpp"

namespace balance {
namespace {

using testing::set_of;

WorldEnsemble single(const Graph& g) { return build_ensemble(g, CascadeModel::kCorrelated, 1, 1); }

Graph random_graph(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.intern(std::to_string(i));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && uniform01(rng) < 0.15) b.add_edge(u, v, uniform01(rng), uniform01(rng));
    }
  }
  return std::move(b).build();
}

double expected_reach(const WorldEnsemble& ens, Campaign c, const VertexSet& seeds) {
  double total = 0.0;
  for (const World& w : ens.worlds()) total += static_cast<double>(reach(w, c, seeds).count());
  return total / static_cast<double>(ens.size());
}

TEST(Bblo, G1BudgetTwo) {
  const Graph g = testing::g1();
  const SelectionResult r = run_bblo(single(g), g, set_of(3, {0}), set_of(3, {2}), 2);
  EXPECT_TRUE(r.s1 == set_of(3, {0}));
  EXPECT_TRUE(r.s2 == set_of(3, {0}));
  EXPECT_EQ(r.final->phi, 3.0);
}

TEST(Bblo, BudgetSplit) {
  const Graph g = testing::g1();
  const WorldEnsemble ens = single(g);
  EXPECT_EQ(run_bblo(ens, g, set_of(3, {0}), set_of(3, {2}), 0).seeds_used(), 0u);
  const SelectionResult one = run_bblo(ens, g, set_of(3, {0}), set_of(3, {2}), 1);
  EXPECT_EQ(one.s1.count(), 1u);
  EXPECT_EQ(one.s2.count(), 0u);
  const Graph big = random_graph(3, 20);
  const WorldEnsemble bens = build_ensemble(big, CascadeModel::kHeterogeneous, 30, 2);
  const SelectionResult five = run_bblo(bens, big, set_of(20, {0}), set_of(20, {1}), 5);
  EXPECT_EQ(five.s1.count(), 3u);
  EXPECT_EQ(five.s2.count(), 2u);
}

TEST(InfmaxGreedy, Examples) {
  const Graph g1 = testing::g1();
  const WorldEnsemble e1 = single(g1);
  EXPECT_EQ(infmax_greedy(e1, g1, Campaign::kSecond, set_of(3, {2}), 1), std::vector<VertexId>{0});
  EXPECT_EQ(infmax_greedy(e1, g1, Campaign::kFirst, set_of(3, {0}), 2), (std::vector<VertexId>{0, 1}));
  const Graph g3 = testing::g3();
  EXPECT_EQ(infmax_greedy(single(g3), g3, Campaign::kFirst, set_of(3, {}), 2),
            (std::vector<VertexId>{0, 1}));
}

TEST(InfmaxGreedy, LengthCappedAtVertexCount) {
  const Graph g = testing::g3();
  EXPECT_EQ(infmax_greedy(single(g), g, Campaign::kFirst, set_of(3, {}), 10).size(), 3u);
}

TEST(InfmaxGreedy, GainsAreNonIncreasingAndDistinct) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_graph(seed, 25);
    const WorldEnsemble ens = build_ensemble(g, CascadeModel::kHeterogeneous, 40, seed);
    for (Campaign c : {Campaign::kFirst, Campaign::kSecond}) {
      const VertexSet initial = set_of(25, {static_cast<VertexId>(seed)});
      const auto list = infmax_greedy(ens, g, c, initial, 10);
      ASSERT_EQ(list.size(), 10u);
      VertexSet chosen = initial;
      double previous_value = expected_reach(ens, c, chosen);
      double previous_gain = 1e300;
      VertexSet seen(25);
      for (VertexId v : list) {
        EXPECT_TRUE(seen.insert(v));
        chosen.insert(v);
        const double value = expected_reach(ens, c, chosen);
        const double gain = value - previous_value;
        EXPECT_LE(gain, previous_gain + 1e-9);
        previous_gain = gain;
        previous_value = value;
      }
    }
  }
}

TEST(UnionPrefix, InterleavesWithCampaignOneFirst) {
  const std::vector<VertexId> a{3}, b{4};
  EXPECT_EQ(union_prefix(a, b, 1), std::vector<VertexId>{3});
  const std::vector<VertexId> c{0, 1, 5}, d{1, 2, 0};
  EXPECT_EQ(union_prefix(c, d, 4), (std::vector<VertexId>{0, 1, 2, 5}));
}

TEST(IntersectionPrefix, PadsFromUnionOrder) {
  const std::vector<VertexId> a{3}, b{4};
  EXPECT_EQ(intersection_prefix(a, b, 1), std::vector<VertexId>{3});
  const std::vector<VertexId> c{5, 1, 2, 0}, d{0, 7, 1};
  EXPECT_EQ(intersection_prefix(c, d, 2), (std::vector<VertexId>{1, 0}));
  EXPECT_EQ(intersection_prefix(c, d, 3), (std::vector<VertexId>{1, 0, 5}));
}

TEST(UnionIntersection, G1BudgetTwo) {
  const Graph g = testing::g1();
  const WorldEnsemble ens = single(g);
  for (auto run : {run_union, run_intersection}) {
    const SelectionResult r = run(ens, g, set_of(3, {0}), set_of(3, {2}), 2, 2);
    EXPECT_TRUE(r.s1 == set_of(3, {0}));
    EXPECT_TRUE(r.s2 == set_of(3, {0}));
    EXPECT_EQ(r.final->phi, 3.0);
    EXPECT_EQ(run(ens, g, set_of(3, {0}), set_of(3, {2}), 0, 2).seeds_used(), 0u);
  }
}

TEST(UnionIntersection, RejectShortLists) {
  const Graph g = testing::g1();
  EXPECT_THROW(run_union(single(g), g, set_of(3, {0}), set_of(3, {2}), 2, 1), std::invalid_argument);
  EXPECT_THROW(run_intersection(single(g), g, set_of(3, {0}), set_of(3, {2}), 2, 1),
               std::invalid_argument);
}

TEST(UnionIntersection, AlwaysCommonSeedsWithinBudget) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_graph(seed + 10, 30);
    const WorldEnsemble ens = build_ensemble(g, CascadeModel::kHeterogeneous, 30, seed);
    for (std::size_t k : {1u, 2u, 5u, 10u}) {
      for (auto run : {run_union, run_intersection}) {
        const SelectionResult r =
            run(ens, g, set_of(30, {0}), set_of(30, {1}), k, default_list_length(k));
        EXPECT_TRUE(r.s1 == r.s2);
        EXPECT_EQ(r.s1.count(), k / 2);
      }
    }
  }
}

TEST(DefaultListLength, IsMaxOfTwiceKAndFifty) {
  EXPECT_EQ(default_list_length(5), 50u);
  EXPECT_EQ(default_list_length(40), 80u);
}

TEST(HighDegree, Examples) {
  const SelectionResult r = run_high_degree(testing::g1(), 2);
  EXPECT_TRUE(r.s1 == set_of(3, {0}));
  EXPECT_TRUE(r.s2 == set_of(3, {1}));
  EXPECT_EQ(run_high_degree(testing::g1(), 0).seeds_used(), 0u);
  std::vector<Edge> star;
  for (VertexId v = 0; v < 5; ++v) star.push_back({5, v, 0.5, 0.5});
  const Graph s({"0", "1", "2", "3", "4", "c"}, star);
  const SelectionResult one = run_high_degree(s, 1);
  EXPECT_TRUE(one.s1 == set_of(6, {5}));
  EXPECT_EQ(one.s2.count(), 0u);
}

TEST(Random, Examples) {
  const Graph g = testing::g3();
  EXPECT_EQ(run_random(g, 0, 4).seeds_used(), 0u);
  const SelectionResult all = run_random(g, 6, 4);
  EXPECT_TRUE(all.s1 == set_of(3, {0, 1, 2}));
  EXPECT_TRUE(all.s2 == set_of(3, {0, 1, 2}));
  EXPECT_THROW(run_random(g, 7, 4), std::invalid_argument);
}

TEST(Random, DeterministicAndSized) {
  const Graph g = random_graph(1, 40);
  const SelectionResult a = run_random(g, 9, 123);
  const SelectionResult b = run_random(g, 9, 123);
  EXPECT_TRUE(a.s1 == b.s1);
  EXPECT_TRUE(a.s2 == b.s2);
  EXPECT_EQ(a.s1.count(), 4u);
  EXPECT_EQ(a.s2.count(), 4u);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 10 && !differs; ++seed) {
    differs = !(run_random(g, 9, seed).s1 == a.s1);
  }
  EXPECT_TRUE(differs);
}

TEST(AllBaselines, RespectBudget) {
  const Graph g = random_graph(77, 30);
  const WorldEnsemble ens = build_ensemble(g, CascadeModel::kHeterogeneous, 30, 1);
  const VertexSet i1 = set_of(30, {2}), i2 = set_of(30, {3});
  for (std::size_t k = 0; k <= 9; ++k) {
    EXPECT_LE(run_bblo(ens, g, i1, i2, k).seeds_used(), k);
    EXPECT_LE(run_union(ens, g, i1, i2, k, default_list_length(k)).seeds_used(), k);
    EXPECT_LE(run_intersection(ens, g, i1, i2, k, default_list_length(k)).seeds_used(), k);
    EXPECT_LE(run_high_degree(g, k).seeds_used(), k);
    EXPECT_LE(run_random(g, k, 5).seeds_used(), k);
  }
}

}  // namespace
}  // namespace balance
