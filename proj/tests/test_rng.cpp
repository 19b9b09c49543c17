#include <doctest.h>

#include <vector>

#include "randdag/bigcount.hpp"
#include "randdag/errors.hpp"
#include "randdag/rng.hpp"

using randdag::BigCount;
using randdag::RngStream;

TEST_CASE("rng is deterministic per seed") {
  RngStream a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    uint64_t x = a.next_u64(), y = b.next_u64(), z = c.next_u64();
    all_equal = all_equal && x == y;
    any_diff = any_diff || x != z;
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("derived streams differ from each other and the base") {
  RngStream base(7);
  RngStream w0 = RngStream::derived(7, 0);
  RngStream w1 = RngStream::derived(7, 1);
  CHECK(base.next_u64() != w0.next_u64());
  CHECK(w0.next_u64() != w1.next_u64());
  // and are reproducible
  RngStream w1b = RngStream::derived(7, 1);
  w1b.next_u64();
  CHECK(w1.next_u64() == w1b.next_u64());
}

TEST_CASE("uniform ranges stay in bounds and look uniform") {
  RngStream rng(1);
  std::vector<uint64_t> counts(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[rng.uniform_below(10)];
  for (uint64_t c : counts) {
    CHECK(c > draws / 10 - 600);
    CHECK(c < draws / 10 + 600);
  }
  for (int i = 0; i < 1000; ++i) {
    int64_t v = rng.uniform_int(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK(rng.uniform_int(5, 5) == 5);
  CHECK_THROWS_AS(rng.uniform_below(0), randdag::MalformedInputError);
}

TEST_CASE("uniform_real01 lies in [0,1) with a sane mean") {
  RngStream rng(99);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    double x = rng.uniform_real01();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    sum += x;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("uniform_big_below respects the bound and hits both halves") {
  RngStream rng(5);
  BigCount bound = BigCount::from_decimal("340282366920938463463374607431768211456");  // 2^128
  BigCount half = BigCount::from_decimal("170141183460469231731687303715884105728");
  int below = 0;
  for (int i = 0; i < 2000; ++i) {
    BigCount x = rng.uniform_big_below(bound);
    REQUIRE(x < bound);
    if (x < half) ++below;
  }
  CHECK(below > 800);
  CHECK(below < 1200);
  // tight bound: 1 always gives 0
  CHECK(rng.uniform_big_below(BigCount(1)).is_zero());
  CHECK_THROWS_AS(rng.uniform_big_below(BigCount(0)),
                  randdag::MalformedInputError);
}

TEST_CASE("bernoulli_ratio is exact for simple ratios") {
  RngStream rng(11);
  int hits = 0;
  for (int i = 0; i < 90000; ++i)
    if (rng.bernoulli_ratio(1, 3)) ++hits;
  CHECK(hits == doctest::Approx(30000).epsilon(0.02));
}
