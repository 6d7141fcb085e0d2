#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "balance/config.hpp"
#include "balance/errors.hpp"
#include "balance/exact.hpp"
#include "balance/experiment.hpp"
#include "balance/graph_io.hpp"
#include "balance/synth.hpp"
#include "support.hpp"

namespace balance {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("balance_test_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // G1 as files plus a config running greedy and hedge at k = 1.
  fs::path write_g1(const std::string& extra = "") {
    spit(dir_ / "g1.tsv", "0\t1\t1.0\t1.0\n1\t2\t1.0\t1.0\n");
    spit(dir_ / "g1.seeds", "[I1]\n0\n[I2]\n2\n");
    spit(dir_ / "exp.cfg",
         "# G1\ngraph = g1.tsv\nseeds = g1.seeds\nalgorithms = greedy, hedge\nbudgets = 1\n"
         "n_worlds = 1000\nrng_seed = 3\noutput_dir = out\n" + extra);
    return dir_ / "exp.cfg";
  }

  fs::path dir_;
};

TEST(Config, DefaultsMatchTheProtocol) {
  const ExperimentConfig cfg;
  EXPECT_EQ(cfg.budgets, (std::vector<std::size_t>{5, 10, 15, 20, 25, 30, 35, 40, 45, 50}));
  EXPECT_EQ(cfg.n_worlds, 1000u);
  EXPECT_EQ(cfg.algorithms.size(), 9u);
}

TEST(Config, ParsesKeysAndResolvesPaths) {
  std::istringstream in(
      "graph = data/g.tsv\nseeds=/abs/s.txt  # trailing\nmodel = correlated\n"
      "algorithms = hedge,cover\nbudgets = 2:8:3\nn_worlds = 50\nrng_seed = 9\nalpha = 0.8\n"
      "interactions = r.tsv\npriors = q.tsv\nell = 70\nverbose = true\n");
  const ExperimentConfig cfg = parse_config(in, "/base");
  EXPECT_EQ(cfg.graph_path, fs::path("/base/data/g.tsv"));
  EXPECT_EQ(cfg.seeds_path, fs::path("/abs/s.txt"));
  EXPECT_EQ(cfg.model, CascadeModel::kCorrelated);
  EXPECT_EQ(cfg.algorithms, (std::vector<std::string>{"hedge", "cover"}));
  EXPECT_EQ(cfg.budgets, (std::vector<std::size_t>{2, 5, 8}));
  EXPECT_EQ(cfg.n_worlds, 50u);
  EXPECT_EQ(cfg.rng_seed, 9u);
  EXPECT_EQ(*cfg.alpha, 0.8);
  EXPECT_EQ(*cfg.ell, 70u);
  EXPECT_TRUE(cfg.verbose);
  EXPECT_NO_THROW(validate_config(cfg));
}

TEST(Config, ErrorsNameTheProblem) {
  const auto error_of = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      parse_config(in, "");
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(error_of("colour = red\n").find("unknown key 'colour'"), std::string::npos);
  EXPECT_NE(error_of("model = quantum\n").find("quantum"), std::string::npos);
  EXPECT_NE(error_of("budgets = 5,0\n").find("positive"), std::string::npos);
  EXPECT_NE(error_of("n_worlds = many\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("algorithms = hedge, magic\n").find("magic"), std::string::npos);
  EXPECT_NE(error_of("\nno equals sign\n").find("line 2"), std::string::npos);
}

TEST(Config, ValidationRejectsBadValues) {
  ExperimentConfig cfg;
  EXPECT_THROW(validate_config(cfg), ConfigError);
  cfg.graph_path = "g";
  cfg.seeds_path = "s";
  EXPECT_NO_THROW(validate_config(cfg));
  cfg.n_worlds = 0;
  EXPECT_THROW(validate_config(cfg), ConfigError);
  cfg.n_worlds = 1;
  cfg.alpha = 1.5;
  EXPECT_THROW(validate_config(cfg), ConfigError);
  cfg.alpha = 0.5;
  EXPECT_THROW(validate_config(cfg), ConfigError);
}

TEST(Config, OverridesWin) {
  std::istringstream in("model = heterogeneous\nbudgets = 5\n");
  ExperimentConfig cfg = parse_config(in, "");
  apply_setting(cfg, "model", "correlated", "");
  apply_setting(cfg, "budgets", "1,2", "");
  EXPECT_EQ(cfg.model, CascadeModel::kCorrelated);
  EXPECT_EQ(cfg.budgets, (std::vector<std::size_t>{1, 2}));
}

TEST(Seeds, ParseAndRoundTrip) {
  const Graph g({"alice", "bob", "carol"}, {});
  std::istringstream in("# sides\n[I1]\nalice\nbob\n[I2]\ncarol\n");
  const SeedSides sides = parse_seeds(in, g);
  EXPECT_TRUE(sides.i1 == testing::set_of(3, {0, 1}));
  EXPECT_TRUE(sides.i2 == testing::set_of(3, {2}));
  std::ostringstream out;
  write_seeds(out, g, sides.i1, sides.i2);
  std::istringstream again(out.str());
  const SeedSides back = parse_seeds(again, g);
  EXPECT_TRUE(back.i1 == sides.i1);
  EXPECT_TRUE(back.i2 == sides.i2);
}

TEST(Seeds, Errors) {
  const Graph g({"alice"}, {});
  std::istringstream unknown("[I1]\nzed\n[I2]\n");
  EXPECT_THROW(parse_seeds(unknown, g), InputError);
  std::istringstream loose("alice\n[I1]\n[I2]\n");
  EXPECT_THROW(parse_seeds(loose, g), InputError);
  std::istringstream half("[I1]\nalice\n");
  EXPECT_THROW(parse_seeds(half, g), InputError);
}

TEST_F(TempDir, G1GreedyAndHedgeBalanceEverything) {
  const ExperimentResult result = run_experiment(load_config(write_g1()));
  ASSERT_EQ(result.rows.size(), 2u);
  for (const ResultRow& row : result.rows) {
    EXPECT_EQ(row.k, 1u);
    EXPECT_EQ(row.symm_diff, 0.0);
    EXPECT_EQ(row.phi, 3.0);
  }
  const std::string csv = slurp(dir_ / "out" / "results.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "algorithm,k,phi,symm_diff,std_err,wall_time_s");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_NE(csv.find("\ngreedy,1,3,0,0,"), std::string::npos);
  EXPECT_NE(csv.find("\nhedge,1,3,0,0,"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "plot" / "greedy.dat"));
  const std::string json = slurp(dir_ / "out" / "seeds.json");
  EXPECT_NE(json.find("\"ensemble_fingerprint\""), std::string::npos);
  EXPECT_NE(json.find("\"s2\": [\n        \"0\"\n      ]"), std::string::npos);
}

TEST_F(TempDir, OneWorldOnDeterministicGraphMatchesThousand) {
  ExperimentConfig cfg = load_config(write_g1());
  cfg.algorithms = {"cover", "bblo", "highdegree"};
  cfg.budgets = {1, 2};
  const ExperimentResult many = run_experiment(cfg);
  cfg.n_worlds = 1;
  const ExperimentResult one = run_experiment(cfg);
  ASSERT_EQ(many.rows.size(), one.rows.size());
  for (std::size_t i = 0; i < many.rows.size(); ++i) EXPECT_EQ(many.rows[i].phi, one.rows[i].phi);
}

std::string without_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST_F(TempDir, RepeatedRunsAreIdenticalApartFromWallTime) {
  const Graph g({"a", "b", "c", "d", "e"},
                {{0, 1, 0.4, 0.6}, {1, 2, 0.5, 0.3}, {2, 3, 0.7, 0.7}, {0, 4, 0.2, 0.9}, {4, 3, 0.5, 0.1}});
  save_edge_list(dir_ / "g.tsv", g);
  spit(dir_ / "s.txt", "[I1]\na\n[I2]\nc\n");
  spit(dir_ / "exp.cfg", "graph = g.tsv\nseeds = s.txt\nbudgets = 1,2,3\nn_worlds = 200\n"
                         "rng_seed = 11\nverbose = true\n");
  ExperimentConfig cfg = load_config(dir_ / "exp.cfg");
  cfg.output_dir = dir_ / "first";
  const ExperimentResult a = run_experiment(cfg);
  cfg.output_dir = dir_ / "second";
  const ExperimentResult b = run_experiment(cfg);
  EXPECT_EQ(without_wall_time(slurp(dir_ / "first" / "results.csv")),
            without_wall_time(slurp(dir_ / "second" / "results.csv")));
  EXPECT_EQ(slurp(dir_ / "first" / "seeds.json"), slurp(dir_ / "second" / "seeds.json"));
  EXPECT_EQ(a.ensemble_fingerprint, b.ensemble_fingerprint);
  for (const ResultRow& row : a.rows) EXPECT_EQ(row.symm_diff, 5.0 - row.phi);
}

TEST_F(TempDir, EnsembleCacheIsReused) {
  const fs::path cfg_path = write_g1("ensemble_cache = worlds.txt\n");
  const ExperimentResult a = run_experiment(load_config(cfg_path));
  ASSERT_TRUE(fs::exists(dir_ / "worlds.txt"));
  const ExperimentResult b = run_experiment(load_config(cfg_path));
  EXPECT_EQ(a.ensemble_fingerprint, b.ensemble_fingerprint);
  ExperimentConfig other = load_config(cfg_path);
  other.rng_seed = 4;
  EXPECT_THROW(run_experiment(other), InputError);
}

TEST_F(TempDir, CorrelatedModelNeedsEqualProbabilities) {
  spit(dir_ / "g.tsv", "a\tb\t0.5\t0.4\n");
  spit(dir_ / "s.txt", "[I1]\na\n[I2]\nb\n");
  spit(dir_ / "exp.cfg", "graph = g.tsv\nseeds = s.txt\nmodel = correlated\nbudgets = 1\n");
  EXPECT_THROW(run_experiment(load_config(dir_ / "exp.cfg")), InputError);
}

TEST_F(TempDir, EstimatedProbabilitiesPath) {
  spit(dir_ / "t.tsv", "u\tv\n");
  spit(dir_ / "r.tsv", "u\tv\t3\t8\n");
  spit(dir_ / "q.tsv", "v\t0.5\t0.5\n");
  spit(dir_ / "s.txt", "[I1]\nu\n[I2]\nu\n");
  spit(dir_ / "exp.cfg", "graph = t.tsv\nseeds = s.txt\nalpha = 0.8\ninteractions = r.tsv\n"
                         "priors = q.tsv\nbudgets = 1\nalgorithms = greedy\noutput_dir = out\n");
  const ExperimentConfig cfg = load_config(dir_ / "exp.cfg");
  const Graph g = load_experiment_graph(cfg);
  EXPECT_NEAR(g.edges()[0].p1, 0.48, 1e-12);
  EXPECT_NO_THROW(run_experiment(cfg));
}

TEST_F(TempDir, PlotSeriesSortedByK) {
  std::vector<ResultRow> rows;
  for (std::size_t k : {30u, 10u, 20u}) {
    rows.push_back({"hedge", k, 0, static_cast<double>(k) / 10.0, 0, 0, {}, {}, false, {}});
    rows.push_back({"cover", k, 0, static_cast<double>(k), 0, 0, {}, {}, false, {}});
  }
  const auto files = emit_plot_data(rows, dir_ / "plot");
  ASSERT_EQ(files.size(), 2u);
  EXPECT_EQ(files[0].filename(), "hedge.dat");
  EXPECT_EQ(slurp(files[0]), "# k\tsymm_diff\n10\t1\n20\t2\n30\t3\n");
  const auto single = emit_plot_data({rows[0]}, dir_ / "one");
  EXPECT_EQ(slurp(single[0]), "# k\tsymm_diff\n30\t3\n");
}

TEST(PlotSeries, TwoAlgorithmsTenBudgets) {
  std::vector<ResultRow> rows;
  for (std::size_t k = 5; k <= 50; k += 5) {
    rows.push_back({"a", k, 0, 1, 0, 0, {}, {}, false, {}});
    rows.push_back({"b", k, 0, 2, 0, 0, {}, {}, false, {}});
  }
  const fs::path dir = fs::temp_directory_path() / "balance_test_plot_ten";
  const auto files = emit_plot_data(rows, dir);
  ASSERT_EQ(files.size(), 2u);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
  }
  fs::remove_all(dir);
}

TEST(RunAlgorithm, UnknownNameIsAConfigError) {
  const Graph g = testing::g1();
  const WorldEnsemble ens = build_ensemble(g, CascadeModel::kCorrelated, 1, 1);
  EXPECT_THROW(run_algorithm("magic", ens, g, g.empty_set(), g.empty_set(), 1, 0, 1), ConfigError);
}

TEST_F(TempDir, TwoCommunityIsDeterministicAndRoundTrips) {
  SynthParams p;
  p.n = 100;
  p.seed = 17;
  const SyntheticInstance a = generate_synthetic(p);
  const SyntheticInstance b = generate_synthetic(p);
  EXPECT_TRUE(a.graph == b.graph);
  EXPECT_TRUE(a.i1 == b.i1);
  write_synthetic(a, dir_ / "g.tsv", dir_ / "s.txt");
  const Graph back = load_edge_list(dir_ / "g.tsv");
  EXPECT_TRUE(back == a.graph);
  const SeedSides sides = load_seeds(dir_ / "s.txt", back);
  EXPECT_TRUE(sides.i1 == a.i1);
  EXPECT_TRUE(sides.i2 == a.i2);
  p.seed = 18;
  EXPECT_FALSE(generate_synthetic(p).graph == a.graph);
}

TEST(Synth, TwoCommunityStructure) {
  SynthParams p;
  p.n = 400;
  p.seed = 2;
  const SyntheticInstance inst = generate_synthetic(p);
  EXPECT_EQ(inst.graph.num_edges(), 2000u);
  std::size_t cross = 0;
  for (const Edge& e : inst.graph.edges()) cross += (e.src < 200) != (e.dst < 200);
  EXPECT_LT(cross, 200u);
  EXPECT_GT(cross, 20u);
  inst.i1.for_each([](VertexId v) { EXPECT_LT(v, 200u); });
  inst.i2.for_each([](VertexId v) { EXPECT_GE(v, 200u); });
  EXPECT_EQ(inst.i1.count(), 5u);
  p.model = CascadeModel::kCorrelated;
  EXPECT_TRUE(validate_correlated(generate_synthetic(p).graph));
}

TEST(Synth, RandomDagWithinExactLimits) {
  SynthParams p;
  p.kind = SynthKind::kRandomDag;
  p.n = 6;
  p.edges = 8;
  p.seeds_per_side = 1;
  p.model = CascadeModel::kCorrelated;
  const SyntheticInstance inst = generate_synthetic(p);
  EXPECT_EQ(inst.graph.num_edges(), 8u);
  EXPECT_NO_THROW(ExactEvaluator(inst.graph, CascadeModel::kCorrelated));
  p.edges = 16;
  EXPECT_THROW(generate_synthetic(p), ConfigError);
}

TEST(Synth, SetCoverReductionMatchesTheReduction) {
  SynthParams p;
  p.kind = SynthKind::kSetCoverReduction;
  p.set_cover = SetCoverInstance{2, {{0}, {1}, {0, 1}}, 1};
  const SyntheticInstance inst = generate_synthetic(p);
  const ReducedInstance direct = reduction_from_set_cover(p.set_cover);
  EXPECT_TRUE(inst.graph == direct.graph);
  EXPECT_TRUE(inst.i2 == direct.i2);
  EXPECT_EQ(inst.budget, 2u);
}

TEST(Synth, ParsesKinds) {
  EXPECT_EQ(parse_synth_kind("random-dag"), SynthKind::kRandomDag);
  EXPECT_THROW(parse_synth_kind("lattice"), ConfigError);
  SynthParams p;
  p.n = 1;
  EXPECT_THROW(generate_synthetic(p), ConfigError);
}

}  // namespace
}  // namespace balance
