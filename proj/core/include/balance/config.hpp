#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balance/cascade.hpp"
#include "balance/graph.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

// Names accepted in the `algorithms` key, in report order.
inline constexpr std::string_view kAlgorithmNames[] = {
    "cover", "common", "hedge", "greedy", "bblo", "union", "intersection", "highdegree", "random"};

bool is_algorithm_name(std::string_view name);

struct ExperimentConfig {
  std::filesystem::path graph_path;
  std::filesystem::path seeds_path;
  CascadeModel model = CascadeModel::kHeterogeneous;
  std::vector<std::string> algorithms = {kAlgorithmNames, kAlgorithmNames + 9};
  std::vector<std::size_t> budgets = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
  std::size_t n_worlds = 1000;
  std::uint64_t rng_seed = 1;
  // When set, graph_path is a topology and probabilities are estimated from
  // interactions_path and priors_path.
  std::optional<double> alpha;
  std::filesystem::path interactions_path;
  std::filesystem::path priors_path;
  std::filesystem::path output_dir = "results";
  // Infmax list length for union / intersection; default_list_length(k) if unset.
  std::optional<std::size_t> ell;
  bool verbose = false;
  std::filesystem::path ensemble_cache;
};

// Flat `key = value` lines; `#` starts a comment. Relative paths resolve
// against base_dir. Throws ConfigError naming the line on unknown keys or bad
// values.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

// Sets one key as a config line would. Used for command-line overrides.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir);

// Throws ConfigError when a required path is missing, a budget is zero,
// n_worlds is zero or alpha is outside [0, 1].
void validate_config(const ExperimentConfig& cfg);

// "5,10,20" -> {5, 10, 20}; "5:50:5" -> {5, 10, ..., 50}.
std::vector<std::size_t> parse_budgets(std::string_view text);

// Campaign sides by external label:
//   [I1]
//   alice
//   [I2]
//   bob
// Throws InputError on unknown labels, lines outside a section, or a
// missing section.
struct SeedSides {
  VertexSet i1;
  VertexSet i2;
};
SeedSides parse_seeds(std::istream& in, const Graph& g);
SeedSides load_seeds(const std::filesystem::path& path, const Graph& g);
void write_seeds(std::ostream& out, const Graph& g, const VertexSet& i1, const VertexSet& i2);
void save_seeds(const std::filesystem::path& path, const Graph& g, const VertexSet& i1,
                const VertexSet& i2);

}  // namespace balance
