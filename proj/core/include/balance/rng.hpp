#pragma once

#include <cstdint>
#include <random>

namespace balance {

// Every random stream in the library is a 64-bit Mersenne Twister. Stream i
// of a run seeded with s is seeded with derive_stream_seed(s, i), so streams
// can be generated in any order (or concurrently) with identical results.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed for stream `index` of a run seeded with `seed`.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Bernoulli(p) from a single draw. p = 1 always succeeds, p = 0 never does.
inline bool flip(Rng& rng, double p) { return uniform01(rng) < p; }

// Uniform integer in [0, bound), bound > 0, by rejection (Lemire).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace balance
