#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/config.hpp"
#include "balance/graph.hpp"
#include "balance/selection.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

struct ResultRow {
  std::string algorithm;
  std::size_t k = 0;
  double phi = 0.0;
  double symm_diff = 0.0;  // n - phi
  double std_err = 0.0;
  double wall_time_s = 0.0;
  VertexSet s1;
  VertexSet s2;
  bool heuristic = false;
  std::vector<TraceStep> trace;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::size_t n_vertices = 0;
  std::uint64_t ensemble_fingerprint = 0;
};

// Runs one named algorithm at budget k on the shared ensemble. `ell` is the
// infmax list length (0 for the default). Throws ConfigError for an unknown
// name.
SelectionResult run_algorithm(std::string_view name, const WorldEnsemble& ens, const Graph& g,
                              const VertexSet& i1, const VertexSet& i2, std::size_t k,
                              std::size_t ell, std::uint64_t rng_seed);

// Every configured algorithm at every budget, scored on `ens`. Rows come in
// budget-major order.
ExperimentResult run_all(const ExperimentConfig& cfg, const WorldEnsemble& ens, const Graph& g,
                         const VertexSet& i1, const VertexSet& i2);

// Loads inputs, builds (or loads) the ensemble, runs everything and writes
// results.csv, seeds.json and plot/<algorithm>.dat under cfg.output_dir.
// Throws ConfigError / InputError with the offending file or key.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Loads the graph the config points at, estimating probabilities when alpha
// is set.
Graph load_experiment_graph(const ExperimentConfig& cfg);

void write_results_csv(std::ostream& out, const ExperimentResult& result);
void write_seeds_json(std::ostream& out, const ExperimentConfig& cfg, const Graph& g,
                      const ExperimentResult& result);

// One `k<TAB>symm_diff` file per algorithm under dir, rows sorted by k.
// Returns the written paths in first-appearance order of the algorithms.
std::vector<std::filesystem::path> emit_plot_data(const std::vector<ResultRow>& rows,
                                                  const std::filesystem::path& dir);

}  // namespace balance
