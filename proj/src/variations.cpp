#include "randdag/variations.hpp"

#include <cmath>
#include <utility>

#include "randdag/errors.hpp"

namespace randdag {

bool is_variation(std::span<const int> values) {
  const int n = (int)values.size();
  int positives = 0;
  int max_positive = 0;
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 0) return false;
    if (v == 0) continue;
    if (v > n) return false;  // cannot reach max == count
    if (seen[v]) return false;
    seen[v] = 1;
    ++positives;
    if (v > max_positive) max_positive = v;
  }
  // Positive entries are distinct; they are exactly {1..d} iff max == count.
  return max_positive == positives;
}

BigCount variation_count(int n) {
  if (n < 0) return BigCount(0);
  // sum_p n!/p!, accumulated from the p = n term downwards.
  BigCount term(1), sum(1);
  for (int p = n - 1; p >= 0; --p) {
    term *= (uint64_t)(p + 1);
    sum += term;
  }
  return sum;
}

BigCount variation_count_by_zeros(int n, int p) {
  if (n < 0 || p < 0 || p > n) return BigCount(0);
  BigCount r(1);
  for (int v = p + 1; v <= n; ++v) r *= (uint64_t)v;
  return r;
}

int64_t bounded_poisson(RngStream& rng, double lambda, int64_t n) {
  if (lambda <= 0.0)
    throw MalformedInputError("bounded_poisson: lambda must be positive");
  if (n < 0) throw MalformedInputError("bounded_poisson: n must be >= 0");
  const double limit = std::exp(-lambda);
  for (;;) {
    int64_t k = 0;
    double p = rng.uniform_real01();
    while (k <= n && p > limit) {
      ++k;
      p *= rng.uniform_real01();
    }
    if (k <= n) return k;
  }
}

Variation sample_variation(RngStream& rng, int n) {
  if (n < 1) throw MalformedInputError("sample_variation: n must be >= 1");
  int64_t p = bounded_poisson(rng, 1.0, n);
  Variation a(n);
  for (int i = (int)p; i < n; ++i) a[i] = i - (int)p + 1;
  // Full Fisher-Yates; the last element needs no swap.
  for (int i = 0; i <= n - 2; ++i) {
    int r = (int)rng.uniform_int(i, n - 1);
    std::swap(a[i], a[r]);
  }
  return a;
}

}  // namespace randdag
