#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "balance/cascade.hpp"

namespace balance {

// Plain-text dump of a sampled ensemble:
//
//   balance-ensemble 1
//   model <heterogeneous|correlated>
//   rng_seed <u64>
//   n_worlds <N>
//   n_vertices <n>
//   n_edges <m>
//   f1 <count> <edge ids...>      one line per world and campaign;
//   f2 <count> <edge ids...>      correlated ensembles omit f2
//
// Edge ids index the graph's edge sequence.
void write_ensemble(std::ostream& out, const WorldEnsemble& ens, const Graph& g);
void save_ensemble(const std::filesystem::path& path, const WorldEnsemble& ens, const Graph& g);

// Reads a dump and checks its header against the requesting configuration.
// Throws InputError on malformed content or any header mismatch.
WorldEnsemble read_ensemble(std::istream& in, const Graph& g, CascadeModel model,
                            std::uint64_t rng_seed, std::size_t n_worlds);
WorldEnsemble load_ensemble(const std::filesystem::path& path, const Graph& g, CascadeModel model,
                            std::uint64_t rng_seed, std::size_t n_worlds);

}  // namespace balance
