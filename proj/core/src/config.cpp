#include "balance/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "balance/errors.hpp"
#include "balance/graph_io.hpp"

namespace balance {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

template <typename T>
T parse_unsigned(std::string_view text, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
}

std::filesystem::path resolve(std::string_view text, const std::filesystem::path& base_dir) {
  std::filesystem::path p{std::string(text)};
  return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

bool is_algorithm_name(std::string_view name) {
  return std::find(std::begin(kAlgorithmNames), std::end(kAlgorithmNames), name) !=
         std::end(kAlgorithmNames);
}

std::vector<std::size_t> parse_budgets(std::string_view text) {
  text = trim(text);
  std::vector<std::size_t> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::size_t> parts;
    while (true) {
      const auto colon = text.find(':');
      parts.push_back(parse_unsigned<std::size_t>(trim(text.substr(0, colon)), "budgets"));
      if (colon == std::string_view::npos) break;
      text.remove_prefix(colon + 1);
    }
    if (parts.size() != 3 || parts[2] == 0 || parts[0] > parts[1]) {
      throw ConfigError("budgets: expected first:last:step with step > 0 and first <= last");
    }
    for (std::size_t k = parts[0]; k <= parts[1]; k += parts[2]) out.push_back(k);
  } else {
    for (const auto& item : split_list(text)) out.push_back(parse_unsigned<std::size_t>(item, "budgets"));
  }
  if (out.empty()) throw ConfigError("budgets: empty list");
  for (std::size_t k : out) {
    if (k == 0) throw ConfigError("budgets: every budget must be positive");
  }
  return out;
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir) {
  value = trim(value);
  if (key == "graph") {
    cfg.graph_path = resolve(value, base_dir);
  } else if (key == "seeds") {
    cfg.seeds_path = resolve(value, base_dir);
  } else if (key == "model") {
    cfg.model = parse_model(value);
  } else if (key == "algorithms") {
    auto names = split_list(value);
    if (names.empty()) throw ConfigError("algorithms: empty list");
    for (const auto& name : names) {
      if (!is_algorithm_name(name)) throw ConfigError("algorithms: unknown algorithm '" + name + "'");
    }
    cfg.algorithms = std::move(names);
  } else if (key == "budgets") {
    cfg.budgets = parse_budgets(value);
  } else if (key == "n_worlds") {
    cfg.n_worlds = parse_unsigned<std::size_t>(value, key);
  } else if (key == "rng_seed") {
    cfg.rng_seed = parse_unsigned<std::uint64_t>(value, key);
  } else if (key == "alpha") {
    double a = 0.0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, a);
    if (value.empty() || ec != std::errc() || ptr != end) {
      throw ConfigError("alpha: expected a number, got '" + std::string(value) + "'");
    }
    cfg.alpha = a;
  } else if (key == "interactions") {
    cfg.interactions_path = resolve(value, base_dir);
  } else if (key == "priors") {
    cfg.priors_path = resolve(value, base_dir);
  } else if (key == "output_dir") {
    cfg.output_dir = resolve(value, base_dir);
  } else if (key == "ell") {
    cfg.ell = parse_unsigned<std::size_t>(value, key);
  } else if (key == "verbose") {
    cfg.verbose = parse_bool(value, key);
  } else if (key == "ensemble_cache") {
    cfg.ensemble_cache = resolve(value, base_dir);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key = value at line " + std::to_string(line_no));
    }
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1), base_dir);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, path.parent_path());
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.graph_path.empty()) throw ConfigError("graph: no graph file given");
  if (cfg.seeds_path.empty()) throw ConfigError("seeds: no seeds file given");
  if (cfg.budgets.empty()) throw ConfigError("budgets: empty list");
  for (std::size_t k : cfg.budgets) {
    if (k == 0) throw ConfigError("budgets: every budget must be positive");
  }
  if (cfg.n_worlds == 0) throw ConfigError("n_worlds: must be at least 1");
  if (cfg.algorithms.empty()) throw ConfigError("algorithms: empty list");
  if (cfg.alpha) {
    if (!(*cfg.alpha >= 0.0 && *cfg.alpha <= 1.0)) throw ConfigError("alpha: must lie in [0, 1]");
    if (cfg.interactions_path.empty() || cfg.priors_path.empty()) {
      throw ConfigError("alpha: interactions and priors files are required");
    }
  }
  if (cfg.ell && *cfg.ell == 0) throw ConfigError("ell: must be positive");
}

SeedSides parse_seeds(std::istream& in, const Graph& g) {
  SeedSides sides{g.empty_set(), g.empty_set()};
  VertexSet* current = nullptr;
  bool saw_first = false;
  bool saw_second = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line == "[I1]") {
      current = &sides.i1;
      saw_first = true;
    } else if (line == "[I2]") {
      current = &sides.i2;
      saw_second = true;
    } else if (current == nullptr) {
      throw InputError("seed label outside an [I1] or [I2] section at line " +
                       std::to_string(line_no));
    } else {
      const auto v = g.find(line);
      if (!v) {
        throw InputError("unknown vertex '" + std::string(line) + "' at line " +
                         std::to_string(line_no));
      }
      current->insert(*v);
    }
  }
  if (!saw_first || !saw_second) throw InputError("seeds file needs both [I1] and [I2] sections");
  return sides;
}

SeedSides load_seeds(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open seeds file " + path.string());
  return parse_seeds(in, g);
}

void write_seeds(std::ostream& out, const Graph& g, const VertexSet& i1, const VertexSet& i2) {
  out << "[I1]\n";
  i1.for_each([&](VertexId v) { out << g.name(v) << '\n'; });
  out << "[I2]\n";
  i2.for_each([&](VertexId v) { out << g.name(v) << '\n'; });
}

void save_seeds(const std::filesystem::path& path, const Graph& g, const VertexSet& i1,
                const VertexSet& i2) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write seeds file " + path.string());
  write_seeds(out, g, i1, i2);
}

}  // namespace balance
