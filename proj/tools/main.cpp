// balance: seed selection for two competing campaigns.
//
//   balance run --config exp.cfg [--model ...] [--budgets ...] [--rng-seed ...]
//   balance estimate-probs --topology t.tsv --interactions r.tsv --priors q.tsv --alpha 0.5 -o g.tsv
//   balance oracle sweep [--suite all] [--seed 1]
//   balance oracle opt --graph g.tsv --seeds s.txt --model correlated -k 2
//   balance synth --kind two-community --n 2000 --graph-out g.tsv --seeds-out s.txt

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "balance/config.hpp"
#include "balance/errors.hpp"
#include "balance/experiment.hpp"
#include "balance/graph_io.hpp"
#include "balance/oracle.hpp"
#include "balance/probability.hpp"
#include "balance/set_cover.hpp"
#include "balance/synth.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitViolation = 4;

struct RunOptions {
  std::string config;
  std::optional<std::string> model;
  std::optional<std::string> budgets;
  std::optional<std::uint64_t> rng_seed;
  std::optional<std::size_t> n_worlds;
  std::optional<std::string> algorithms;
  std::optional<std::string> output_dir;
  bool verbose = false;
};

int cmd_run(const RunOptions& o) {
  balance::ExperimentConfig cfg = balance::load_config(o.config);
  const std::filesystem::path cwd = std::filesystem::current_path();
  if (o.model) balance::apply_setting(cfg, "model", *o.model, cwd);
  if (o.budgets) balance::apply_setting(cfg, "budgets", *o.budgets, cwd);
  if (o.rng_seed) cfg.rng_seed = *o.rng_seed;
  if (o.n_worlds) cfg.n_worlds = *o.n_worlds;
  if (o.algorithms) balance::apply_setting(cfg, "algorithms", *o.algorithms, cwd);
  if (o.output_dir) balance::apply_setting(cfg, "output_dir", *o.output_dir, cwd);
  if (o.verbose) cfg.verbose = true;

  const balance::ExperimentResult result = balance::run_experiment(cfg);
  std::printf("%-13s %4s %12s %12s %10s %9s\n", "algorithm", "k", "phi", "symm_diff", "std_err",
              "time_s");
  for (const auto& row : result.rows) {
    std::printf("%-13s %4zu %12.4f %12.4f %10.4f %9.3f%s\n", row.algorithm.c_str(), row.k, row.phi,
                row.symm_diff, row.std_err, row.wall_time_s, row.heuristic ? "  (heuristic)" : "");
  }
  std::printf("wrote %s\n", (cfg.output_dir / "results.csv").string().c_str());
  return 0;
}

struct EstimateOptions {
  std::string topology;
  std::string interactions;
  std::string priors;
  double alpha = 0.5;
  std::string output;
};

int cmd_estimate(const EstimateOptions& o) {
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0)) throw balance::ConfigError("alpha must lie in [0, 1]");
  const balance::Graph topology = balance::load_topology(o.topology);
  const balance::Graph g = balance::estimate_probabilities(
      topology, balance::load_interactions(o.interactions, topology),
      balance::load_priors(o.priors, topology), o.alpha);
  if (o.output.empty() || o.output == "-") {
    balance::write_edge_list(std::cout, g);
  } else {
    balance::save_edge_list(o.output, g);
  }
  return 0;
}

struct SweepOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t instances = 0;
};

int cmd_sweep(const SweepOptions& o) {
  const auto want = [&](const char* name) { return o.suite == "all" || o.suite == name; };
  const auto count = [&](std::size_t fallback) { return o.instances == 0 ? fallback : o.instances; };
  if (!(want("omega") || want("cover") || want("hedge") || want("halving") || want("reduction"))) {
    throw balance::ConfigError("unknown suite '" + o.suite +
                               "' (expected all, omega, cover, hedge, halving or reduction)");
  }
  std::vector<balance::SweepSummary> summaries;
  if (want("omega")) summaries.push_back(balance::sweep_omega_properties(count(100), 3, 10, 64, o.seed));
  if (want("cover")) summaries.push_back(balance::sweep_cover_ratio(count(50), o.seed));
  if (want("hedge")) summaries.push_back(balance::sweep_hedge_common_ratio(count(50), o.seed));
  if (want("halving")) summaries.push_back(balance::sweep_halving_lemma(count(30), {2, 4}, o.seed));
  if (want("reduction")) summaries.push_back(balance::sweep_reduction(3, 3, 2));

  bool ok = true;
  for (const auto& s : summaries) {
    std::printf("%-28s %s  instances=%zu checks=%zu violations=%zu %.2fs\n", s.name.c_str(),
                s.passed() ? "PASS" : "FAIL", s.instances, s.checks, s.violations, s.seconds);
    if (!s.passed()) {
      std::printf("  first violation: %s\n", s.first_violation.c_str());
      ok = false;
    }
  }
  return ok ? 0 : kExitViolation;
}

struct OptOptions {
  std::string graph;
  std::string seeds;
  std::string model = "correlated";
  std::size_t k = 2;
};

int cmd_opt(const OptOptions& o) {
  const balance::Graph g = balance::load_edge_list(o.graph);
  const balance::SeedSides sides = balance::load_seeds(o.seeds, g);
  const balance::CascadeModel model = balance::parse_model(o.model);
  const balance::OracleReport report = balance::brute_force_opt(g, model, sides.i1, sides.i2, o.k);
  std::printf("OPT phi = %s  symm_diff = %s  (%zu assignments checked)\n",
              balance::format_double(report.opt_value).c_str(),
              balance::format_double(static_cast<double>(g.num_vertices()) - report.opt_value).c_str(),
              report.instances_checked);
  for (const auto& [s1, s2] : report.opt_assignments) {
    std::string line = "  S1 = {";
    s1.for_each([&](balance::VertexId v) { line += " " + g.name(v); });
    line += " }  S2 = {";
    s2.for_each([&](balance::VertexId v) { line += " " + g.name(v); });
    std::printf("%s }\n", line.c_str());
  }
  return 0;
}

struct SynthOptions {
  std::string kind = "two-community";
  balance::SynthParams params;
  std::string model = "heterogeneous";
  std::string set_cover;
  std::string graph_out = "graph.tsv";
  std::string seeds_out = "seeds.txt";
};

int cmd_synth(SynthOptions o) {
  o.params.kind = balance::parse_synth_kind(o.kind);
  o.params.model = balance::parse_model(o.model);
  if (o.params.kind == balance::SynthKind::kSetCoverReduction) {
    if (o.set_cover.empty()) throw balance::ConfigError("--set-cover is required for this kind");
    o.params.set_cover = balance::load_set_cover(o.set_cover);
  }
  const balance::SyntheticInstance inst = balance::generate_synthetic(o.params);
  balance::write_synthetic(inst, o.graph_out, o.seeds_out);
  std::printf("wrote %s (%zu vertices, %zu edges) and %s\n", o.graph_out.c_str(),
              inst.graph.num_vertices(), inst.graph.num_edges(), o.seeds_out.c_str());
  if (inst.budget != 0) std::printf("budget %zu\n", inst.budget);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed selection balancing two competing information campaigns"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment from a config file");
  run_cmd->add_option("--config,-c", run.config, "key = value config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--model", run.model, "heterogeneous or correlated");
  run_cmd->add_option("--budgets", run.budgets, "comma list or first:last:step");
  run_cmd->add_option("--rng-seed", run.rng_seed, "ensemble seed");
  run_cmd->add_option("--n-worlds", run.n_worlds, "sampled worlds");
  run_cmd->add_option("--algorithms", run.algorithms, "comma list");
  run_cmd->add_option("--output-dir,-o", run.output_dir, "results directory");
  run_cmd->add_flag("--verbose,-v", run.verbose, "include per-iteration traces in seeds.json");

  EstimateOptions est;
  auto* est_cmd = app.add_subcommand("estimate-probs", "Estimate edge probabilities from interaction counts");
  est_cmd->add_option("--topology", est.topology, "edge list without probabilities")->required();
  est_cmd->add_option("--interactions", est.interactions, "u v R(u,v) R(v) lines")->required();
  est_cmd->add_option("--priors", est.priors, "v q1 q2 lines")->required();
  est_cmd->add_option("--alpha", est.alpha, "prior weight in [0, 1]")->required();
  est_cmd->add_option("--output,-o", est.output, "output edge list (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks on small instances");
  oracle_cmd->require_subcommand(1);
  SweepOptions sweep;
  auto* sweep_cmd = oracle_cmd->add_subcommand("sweep", "Run the property sweeps");
  sweep_cmd->add_option("--suite", sweep.suite, "all, omega, cover, hedge, halving or reduction");
  sweep_cmd->add_option("--seed", sweep.seed, "instance generator seed");
  sweep_cmd->add_option("--instances", sweep.instances, "instances per suite (0 = default)");
  OptOptions opt;
  auto* opt_cmd = oracle_cmd->add_subcommand("opt", "Exact optimum of a small instance");
  opt_cmd->add_option("--graph", opt.graph, "edge list")->required();
  opt_cmd->add_option("--seeds", opt.seeds, "[I1]/[I2] seeds file")->required();
  opt_cmd->add_option("--model", opt.model, "heterogeneous or correlated");
  opt_cmd->add_option("-k,--budget", opt.k, "|S1| + |S2| bound");

  SynthOptions syn;
  auto* syn_cmd = app.add_subcommand("synth", "Generate a synthetic instance");
  syn_cmd->add_option("--kind", syn.kind, "two-community, random-dag or set-cover-reduction");
  syn_cmd->add_option("--n", syn.params.n, "vertices");
  syn_cmd->add_option("--edges", syn.params.edges, "edges (0 = kind default)");
  syn_cmd->add_option("--cross-fraction", syn.params.cross_fraction, "two-community cross edges");
  syn_cmd->add_option("--min-p", syn.params.min_probability, "lowest base probability");
  syn_cmd->add_option("--max-p", syn.params.max_probability, "highest base probability");
  syn_cmd->add_option("--away-factor", syn.params.away_factor, "probability multiplier off home side");
  syn_cmd->add_option("--seeds-per-side", syn.params.seeds_per_side, "|I1| and |I2|");
  syn_cmd->add_option("--model", syn.model, "heterogeneous or correlated");
  syn_cmd->add_option("--seed", syn.params.seed, "generator seed");
  syn_cmd->add_option("--set-cover", syn.set_cover, "set-cover instance file");
  syn_cmd->add_option("--graph-out", syn.graph_out, "edge list path");
  syn_cmd->add_option("--seeds-out", syn.seeds_out, "seeds file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*est_cmd) return cmd_estimate(est);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*opt_cmd) return cmd_opt(opt);
    if (*syn_cmd) return cmd_synth(syn);
  } catch (const balance::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const balance::InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const balance::LimitExceeded& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
