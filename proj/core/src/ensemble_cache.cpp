#include "balance/ensemble_cache.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "balance/errors.hpp"

namespace balance {
namespace {

constexpr const char* kMagic = "balance-ensemble";
constexpr int kVersion = 1;

void write_layer(std::ostream& out, const char* tag, std::span<const EdgeId> edges) {
  out << tag << ' ' << edges.size();
  for (EdgeId e : edges) out << ' ' << e;
  out << '\n';
}

template <typename T>
T expect_field(std::istream& in, const std::string& key) {
  std::string got;
  T value{};
  if (!(in >> got) || got != key || !(in >> value)) {
    throw InputError("ensemble cache: expected header field '" + key + "'");
  }
  return value;
}

std::vector<EdgeId> read_layer(std::istream& in, const char* tag, std::size_t n_edges) {
  std::string got;
  std::size_t count = 0;
  if (!(in >> got) || got != tag || !(in >> count) || count > n_edges) {
    throw InputError(std::string("ensemble cache: malformed '") + tag + "' line");
  }
  std::vector<EdgeId> edges(count);
  for (EdgeId& e : edges) {
    if (!(in >> e) || e >= n_edges) throw InputError("ensemble cache: bad edge id");
  }
  return edges;
}

}  // namespace

void write_ensemble(std::ostream& out, const WorldEnsemble& ens, const Graph& g) {
  if (ens.weighted()) throw std::invalid_argument("only sampled ensembles can be cached");
  out << kMagic << ' ' << kVersion << '\n'
      << "model " << to_string(ens.model()) << '\n'
      << "rng_seed " << ens.rng_seed() << '\n'
      << "n_worlds " << ens.size() << '\n'
      << "n_vertices " << g.num_vertices() << '\n'
      << "n_edges " << g.num_edges() << '\n';
  for (const World& w : ens.worlds()) {
    write_layer(out, "f1", w.live_edges(Campaign::kFirst));
    if (!w.coupled()) write_layer(out, "f2", w.live_edges(Campaign::kSecond));
  }
}

void save_ensemble(const std::filesystem::path& path, const WorldEnsemble& ens, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  write_ensemble(out, ens, g);
}

WorldEnsemble read_ensemble(std::istream& in, const Graph& g, CascadeModel model,
                            std::uint64_t rng_seed, std::size_t n_worlds) {
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic || version != kVersion) {
    throw InputError("ensemble cache: unrecognized header");
  }
  const auto model_text = expect_field<std::string>(in, "model");
  const auto seed = expect_field<std::uint64_t>(in, "rng_seed");
  const auto worlds = expect_field<std::size_t>(in, "n_worlds");
  const auto vertices = expect_field<std::size_t>(in, "n_vertices");
  const auto edges = expect_field<std::size_t>(in, "n_edges");
  if (model_text != to_string(model) || seed != rng_seed || worlds != n_worlds ||
      vertices != g.num_vertices() || edges != g.num_edges()) {
    throw InputError("ensemble cache header does not match the requested configuration");
  }
  const bool coupled = model == CascadeModel::kCorrelated;
  std::vector<World> out;
  out.reserve(n_worlds);
  for (std::size_t i = 0; i < n_worlds; ++i) {
    auto f1 = read_layer(in, "f1", edges);
    std::vector<EdgeId> f2;
    if (!coupled) f2 = read_layer(in, "f2", edges);
    out.emplace_back(g, std::move(f1), std::move(f2), coupled);
  }
  return WorldEnsemble(model, rng_seed, g.num_vertices(), std::move(out));
}

WorldEnsemble load_ensemble(const std::filesystem::path& path, const Graph& g, CascadeModel model,
                            std::uint64_t rng_seed, std::size_t n_worlds) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_ensemble(in, g, model, rng_seed, n_worlds);
}

}  // namespace balance
