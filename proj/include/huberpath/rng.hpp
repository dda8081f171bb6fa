#pragma once

#include <cstdint>
#include <random>

namespace huberpath::rng {

// Fixed, versioned random stream: mt19937_64 seeded through splitmix64,
// with every variate derived by the explicit formulas below. A given
// (seed, draw sequence) therefore reproduces exactly for the life of the
// stream version; bump kStreamVersion if any formula changes.
inline constexpr int kStreamVersion = 1;

/// splitmix64 step: advances the state and returns a mixed 64-bit word.
std::uint64_t splitmix64_next(std::uint64_t& state);

class Stream {
 public:
  explicit Stream(std::uint64_t seed);

  /// Independent child stream for a fixed index; derivation depends only on
  /// (seed, index), never on how many draws this stream has made.
  Stream substream(std::uint64_t index) const;

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  /// Uniform on (0, 1]: ((x >> 11) + 1) * 2^-53. Never zero, safe to log.
  double uniform_pos();

  /// Uniform integer in [0, bound) via 53-bit scaling; bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal by Box-Muller (cosine branch), two uniforms per call.
  double normal();

  /// Chi-square with integer dof: sum of dof squared normals.
  double chi_square(int dof);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

/// Seed for replication `index` of a run keyed by `master`; used to give
/// benchmark replications independent reproducible streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace huberpath::rng
