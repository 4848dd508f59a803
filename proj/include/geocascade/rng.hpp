#pragma once

#include <cstdint>
#include <random>

namespace geocascade {

// Purpose tags for substream derivation. Every random draw in an experiment
// comes from a stream keyed by (master_seed, grid_index, replicate, purpose),
// so results do not depend on replicate execution order and any single stage
// can be reproduced in isolation.
enum class StreamPurpose : std::uint64_t {
  positions = 1,
  states = 2,
  thresholds = 3,
  seed_pick = 4,
};

// splitmix64 finalizer; also usable as a standalone 64-bit hash step.
std::uint64_t mix64(std::uint64_t z);

// Counter-based substream key: hash-chains the master seed with the grid
// index (sweep point), replicate index and purpose tag.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                          std::uint64_t replicate, StreamPurpose purpose);

// Deterministic random stream. mt19937_64 output is fully specified by the
// C++ standard, and the samplers below map it to doubles with explicit bit
// arithmetic, so sequences are byte-stable across platforms and toolchains
// (std::uniform_real_distribution and friends make no such promise).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0,1]: top 53 bits, lattice shifted off zero.
  double uniform01();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Exponential with rate > 0 via inverse CDF; finite because uniform01 > 0.
  double exponential(double rate);

  // Exact Poisson count via unit-rate exponential spacings; O(mean) per draw.
  long long poisson(double mean);

  // Uniform integer in [0, n), n >= 1; mask-and-reject, no modulo bias.
  long long uniform_int(long long n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace geocascade
