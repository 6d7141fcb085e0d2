#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "balance/graph.hpp"
#include "balance/vertex_set.hpp"

namespace balance {

// Elements are 0-based ids in [0, universe_size).
struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t k = 0;
};

// First line `|U| k`, then one line per set listing element ids.
// Throws InputError on empty sets or out-of-range elements.
SetCoverInstance parse_set_cover(std::istream& in);
SetCoverInstance load_set_cover(const std::filesystem::path& path);
void write_set_cover(std::ostream& out, const SetCoverInstance& inst);

// Whether at most k of the sets cover the universe, by direct enumeration.
bool is_k_coverable(const SetCoverInstance& inst);

// Balance instance whose zero-imbalance solutions correspond to k-covers.
//   V1: one vertex per element                         ids [0, |U|)
//   V2: k copies of one vertex per set, copy-major     ids |U| + j*l + i
//   V3: one vertex b_j per copy                        ids |U| + k*l + j
// Set-vertex (j, i) has edges to its elements and to b_j, all with
// p1 = p2 = 1. I1 = ∅, I2 = V1 ∪ V3, budget 2k.
struct ReducedInstance {
  Graph graph;
  VertexSet i1;
  VertexSet i2;
  std::size_t budget = 0;
};

// Requires k >= 1 and at least one set.
ReducedInstance reduction_from_set_cover(const SetCoverInstance& inst);

// Every instance with 1..max_universe elements, 1..max_sets distinct
// non-empty sets whose union is the universe, and k in 1..max_k.
std::vector<SetCoverInstance> enumerate_set_cover_instances(std::size_t max_universe,
                                                            std::size_t max_sets,
                                                            std::size_t max_k);

}  // namespace balance
