#ifndef RANDDAG_RNG_HPP
#define RANDDAG_RNG_HPP

#include <array>
#include <cstdint>

#include "randdag/bigcount.hpp"

namespace randdag {

/// Seeded deterministic source of uniform integers, reals and big integers.
///
/// The generator is xoshiro256** seeded through a splitmix64 chain, so the
/// same seed yields the same stream on every platform.  Integer ranges are
/// unbiased (rejection on the native 64-bit words), reals carry 53 random
/// bits, and big integers below a bound are drawn by top-limb rejection.
class RngStream {
 public:
  explicit RngStream(uint64_t seed);

  /// Independent stream for worker `index` of a run seeded with `seed`.
  static RngStream derived(uint64_t seed, uint64_t index);

  uint64_t next_u64();

  /// Uniform integer in [0, n); n must be >= 1.
  uint64_t uniform_below(uint64_t n);

  /// Uniform integer in [lo, hi] inclusive.  A single-value range returns
  /// lo without advancing the generator.
  int64_t uniform_int(int64_t lo, int64_t hi);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_real01();

  /// Exact Bernoulli(num/den) using one integer draw.
  bool bernoulli_ratio(uint64_t num, uint64_t den);

  /// Uniform BigCount in [0, bound); bound must be positive.
  BigCount uniform_big_below(const BigCount& bound);

  /// Counters used by the random-bit-budget tests.
  uint64_t integer_draws() const { return integer_draws_; }
  uint64_t real_draws() const { return real_draws_; }

 private:
  std::array<uint64_t, 4> s_{};
  uint64_t integer_draws_ = 0;
  uint64_t real_draws_ = 0;
};

}  // namespace randdag

#endif
