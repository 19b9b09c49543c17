#include "randdag/rng.hpp"

#include "randdag/errors.hpp"

namespace randdag {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(uint64_t seed) {
  uint64_t st = seed;
  for (auto& w : s_) w = splitmix64(st);
}

RngStream RngStream::derived(uint64_t seed, uint64_t index) {
  uint64_t st = seed;
  uint64_t a = splitmix64(st);
  st = a ^ (index * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  return RngStream(splitmix64(st));
}

uint64_t RngStream::next_u64() {
  uint64_t result = rotl(s_[1] * 5, 7) * 9;
  uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t RngStream::uniform_below(uint64_t n) {
  if (n == 0) throw MalformedInputError("uniform_below: empty range");
  ++integer_draws_;
  if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
  // Reject the partial block at the top of the 64-bit range.
  uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

int64_t RngStream::uniform_int(int64_t lo, int64_t hi) {
  if (lo > hi) throw MalformedInputError("uniform_int: empty range");
  if (lo == hi) {
    ++integer_draws_;
    return lo;
  }
  return lo + (int64_t)uniform_below((uint64_t)(hi - lo) + 1);
}

double RngStream::uniform_real01() {
  ++real_draws_;
  return (double)(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli_ratio(uint64_t num, uint64_t den) {
  return uniform_below(den) < num;
}

BigCount RngStream::uniform_big_below(const BigCount& bound) {
  if (bound.is_zero())
    throw MalformedInputError("uniform_big_below: bound must be positive");
  size_t bits = bound.bit_length();
  if (bits <= 64) return BigCount(uniform_below(bound.limbs()[0]));
  size_t nlimbs = (bits + 63) / 64;
  size_t top_bits = bits - 64 * (nlimbs - 1);
  uint64_t top_mask =
      top_bits == 64 ? ~0ull : ((uint64_t(1) << top_bits) - 1);
  std::vector<uint64_t> limbs(nlimbs);
  for (;;) {
    ++integer_draws_;
    for (size_t i = 0; i + 1 < nlimbs; ++i) limbs[i] = next_u64();
    limbs[nlimbs - 1] = next_u64() & top_mask;
    BigCount candidate = BigCount::from_limbs(limbs);
    if (candidate < bound) return candidate;
  }
}

}  // namespace randdag
