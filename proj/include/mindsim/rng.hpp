#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace mindsim {

// 64-bit finalizer (splitmix64). Used to derive independent seed streams.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for substream `stream` of a base seed. The sweep harness gives each
// (SNR point, purpose) pair its own stream so points are independent jobs.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Deterministic random source. Transforms are hand-rolled on top of
// mt19937_64 because std::*_distribution output is implementation-defined;
// identical seeds must give identical draws wherever the code is built.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Marsaglia's polar method (no trig calls).
  double gaussian();

  bool bernoulli(double p) { return uniform() < p; }

  // Index drawn from a pmf (entries >= 0 summing to ~1).
  int discrete(std::span<const double> pmf);

  // In-place Fisher-Yates shuffle.
  void shuffle(std::span<int> idx);

 private:
  std::mt19937_64 engine_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace mindsim
