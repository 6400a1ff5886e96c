#pragma once

#include <cstdint>

namespace qmsa {

/// Deterministic splittable PRNG built on the splitmix64 step function.
/// Child streams are derived from (seed, stream id), so independent consumers
/// (each optimizer start, the sampler, each sweep point) never share a
/// sequence and results do not depend on evaluation order.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform double in [lo, hi).
  double next_double(double lo, double hi);

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound);

  /// Derive an independent child stream. Deterministic in (seed, stream).
  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

} // namespace qmsa
