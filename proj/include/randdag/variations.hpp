#ifndef RANDDAG_VARIATIONS_HPP
#define RANDDAG_VARIATIONS_HPP

#include <span>
#include <vector>

#include "randdag/bigcount.hpp"
#include "randdag/rng.hpp"

namespace randdag {

/// A variation is a sequence of non-negative integers whose positive entries
/// are exactly {1..d} for d = number of positive entries, each occurring
/// once.  Rows of the matrix encoding of a DOAG are variations.
using Variation = std::vector<int>;

/// O(n) check of the two variation conditions; negative entries yield false.
bool is_variation(std::span<const int> values);

/// v_n = sum_p n!/p!, the number of variations of size n.
BigCount variation_count(int n);

/// v_{n,p} = n!/p!, the number of variations of size n with exactly p zeros;
/// 0 when p > n or p < 0.
BigCount variation_count_by_zeros(int n, int p);

/// Poisson(lambda) conditioned to be at most n, by the product-of-uniforms
/// loop with early exit past n.  Terminates with probability 1.
int64_t bounded_poisson(RngStream& rng, double lambda, int64_t n);

/// Uniform random variation of size n: draw the zero count from the
/// conditioned Poisson(1) law, then one full Fisher-Yates shuffle.
Variation sample_variation(RngStream& rng, int n);

}  // namespace randdag

#endif
