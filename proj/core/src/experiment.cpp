#include "balance/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include "json.hpp"

#include "balance/baselines.hpp"
#include "balance/ensemble_cache.hpp"
#include "balance/errors.hpp"
#include "balance/graph_io.hpp"
#include "balance/objective.hpp"
#include "balance/probability.hpp"
#include "balance/rng.hpp"

namespace balance {
namespace {

// Separates the Random baseline's streams from the ensemble's.
constexpr std::uint64_t kRandomSalt = 0x72616e646f6d5f31ULL;

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::vector<std::string> labels(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](VertexId v) { out.push_back(g.name(v)); });
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace

SelectionResult run_algorithm(std::string_view name, const WorldEnsemble& ens, const Graph& g,
                              const VertexSet& i1, const VertexSet& i2, std::size_t k,
                              std::size_t ell, std::uint64_t rng_seed) {
  const std::size_t length = ell == 0 ? default_list_length(k) : ell;
  if (name == "cover") return run_cover(ens, g, i1, i2, k);
  if (name == "common") return run_common(ens, g, i1, i2, k);
  if (name == "hedge") return run_hedge(ens, g, i1, i2, k);
  if (name == "greedy") return run_greedy_phi(ens, g, i1, i2, k);
  if (name == "bblo") return run_bblo(ens, g, i1, i2, k);
  if (name == "union") return run_union(ens, g, i1, i2, k, length);
  if (name == "intersection") return run_intersection(ens, g, i1, i2, k, length);
  if (name == "highdegree") return run_high_degree(g, k);
  if (name == "random") return run_random(g, k, derive_stream_seed(rng_seed ^ kRandomSalt, k));
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

ExperimentResult run_all(const ExperimentConfig& cfg, const WorldEnsemble& ens, const Graph& g,
                         const VertexSet& i1, const VertexSet& i2) {
  ExperimentResult result;
  result.n_vertices = g.num_vertices();
  result.ensemble_fingerprint = ens.fingerprint();
  const auto n = static_cast<double>(g.num_vertices());
  for (std::size_t k : cfg.budgets) {
    for (const auto& name : cfg.algorithms) {
      const auto start = std::chrono::steady_clock::now();
      SelectionResult sel = run_algorithm(name, ens, g, i1, i2, k, cfg.ell.value_or(0), cfg.rng_seed);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      SeedAssignment assign = SeedAssignment::initial(i1, i2);
      assign.s1 = sel.s1;
      assign.s2 = sel.s2;
      assign.k = k;
      const ObjectiveBreakdown score = estimate_phi(ens, assign);

      ResultRow row;
      row.algorithm = name;
      row.k = k;
      row.phi = score.phi;
      row.symm_diff = n - score.phi;
      row.std_err = score.std_err;
      row.wall_time_s = seconds;
      row.s1 = std::move(sel.s1);
      row.s2 = std::move(sel.s2);
      row.heuristic = sel.heuristic;
      if (cfg.verbose) row.trace = std::move(sel.trace);
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

Graph load_experiment_graph(const ExperimentConfig& cfg) {
  if (!cfg.alpha) return load_edge_list(cfg.graph_path);
  const Graph topology = load_topology(cfg.graph_path);
  return estimate_probabilities(topology, load_interactions(cfg.interactions_path, topology),
                                load_priors(cfg.priors_path, topology), *cfg.alpha);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Graph g = load_experiment_graph(cfg);
  if (cfg.model == CascadeModel::kCorrelated && !validate_correlated(g)) {
    throw InputError("correlated model requires p1 == p2 on every edge of " +
                     cfg.graph_path.string());
  }
  const SeedSides sides = load_seeds(cfg.seeds_path, g);

  WorldEnsemble ens;
  if (!cfg.ensemble_cache.empty() && std::filesystem::exists(cfg.ensemble_cache)) {
    ens = load_ensemble(cfg.ensemble_cache, g, cfg.model, cfg.rng_seed, cfg.n_worlds);
  } else {
    ens = build_ensemble(g, cfg.model, cfg.n_worlds, cfg.rng_seed);
    if (!cfg.ensemble_cache.empty()) save_ensemble(cfg.ensemble_cache, ens, g);
  }

  ExperimentResult result = run_all(cfg, ens, g, sides.i1, sides.i2);

  std::filesystem::create_directories(cfg.output_dir);
  {
    auto out = open_output(cfg.output_dir / "results.csv");
    write_results_csv(out, result);
  }
  {
    auto out = open_output(cfg.output_dir / "seeds.json");
    write_seeds_json(out, cfg, g, result);
  }
  emit_plot_data(result.rows, cfg.output_dir / "plot");
  return result;
}

void write_results_csv(std::ostream& out, const ExperimentResult& result) {
  out << "algorithm,k,phi,symm_diff,std_err,wall_time_s\n";
  for (const ResultRow& row : result.rows) {
    out << row.algorithm << ',' << row.k << ',' << format_double(row.phi) << ','
        << format_double(row.symm_diff) << ',' << format_double(row.std_err) << ','
        << format_double(row.wall_time_s) << '\n';
  }
}

void write_seeds_json(std::ostream& out, const ExperimentConfig& cfg, const Graph& g,
                      const ExperimentResult& result) {
  nlohmann::ordered_json doc;
  doc["graph"] = cfg.graph_path.string();
  doc["model"] = std::string(to_string(cfg.model));
  doc["rng_seed"] = cfg.rng_seed;
  doc["n_worlds"] = cfg.n_worlds;
  doc["n_vertices"] = result.n_vertices;
  doc["ensemble_fingerprint"] = hex64(result.ensemble_fingerprint);
  auto& rows = doc["results"] = nlohmann::ordered_json::array();
  for (const ResultRow& row : result.rows) {
    nlohmann::ordered_json item;
    item["algorithm"] = row.algorithm;
    item["k"] = row.k;
    item["phi"] = row.phi;
    item["symm_diff"] = row.symm_diff;
    item["heuristic"] = row.heuristic;
    item["s1"] = labels(g, row.s1);
    item["s2"] = labels(g, row.s2);
    if (cfg.verbose) {
      auto& trace = item["trace"] = nlohmann::ordered_json::array();
      for (const TraceStep& step : row.trace) {
        trace.push_back({{"iteration", step.iteration},
                         {"option", describe(step.option, &g)},
                         {"objective", step.objective}});
      }
    }
    rows.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

std::vector<std::filesystem::path> emit_plot_data(const std::vector<ResultRow>& rows,
                                                  const std::filesystem::path& dir) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::size_t, double>>> series;
  for (const ResultRow& row : rows) {
    auto [it, fresh] = series.try_emplace(row.algorithm);
    if (fresh) order.push_back(row.algorithm);
    it->second.emplace_back(row.k, row.symm_diff);
  }
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& name : order) {
    auto& points = series[name];
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto path = dir / (name + ".dat");
    auto out = open_output(path);
    out << "# k\tsymm_diff\n";
    for (const auto& [k, value] : points) out << k << '\t' << format_double(value) << '\n';
    written.push_back(path);
  }
  return written;
}

}  // namespace balance
