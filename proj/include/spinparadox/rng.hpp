#pragma once

#include <cstdint>
#include <random>

namespace spinparadox {

/// Reproducible uniform source.
///
/// The engine is std::mt19937_64, whose output sequence for a given seed is
/// fixed by the C++ standard. Doubles are formed from the top 53 bits of each
/// draw, (x >> 11) * 2^-53, instead of std::uniform_real_distribution, whose
/// algorithm is implementation-defined. Together these make sampled counts
/// identical on every conforming platform.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform double in [0, 1).
  double next_uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// Seed for shot batch `batch_index` of a run seeded with `base_seed`
/// (wraps modulo 2^64).
constexpr std::uint64_t derive_batch_seed(std::uint64_t base_seed, std::uint64_t batch_index) {
  return base_seed + batch_index;
}

}  // namespace spinparadox
