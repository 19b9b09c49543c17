#include <doctest.h>

#include <random>

#include "randdag/bigcount.hpp"
#include "randdag/errors.hpp"

using randdag::BigCount;

TEST_CASE("bigcount small arithmetic matches native") {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t a = gen() >> (gen() % 40);
    uint64_t b = gen() >> (gen() % 40);
    BigCount x(a), y(b);
    unsigned __int128 sum = (unsigned __int128)a + b;
    unsigned __int128 prod = (unsigned __int128)a * b;
    auto dec128 = [](unsigned __int128 v) {
      if (v == 0) return std::string("0");
      std::string s;
      while (v) {
        s.insert(s.begin(), (char)('0' + (int)(v % 10)));
        v /= 10;
      }
      return s;
    };
    CHECK((x + y).to_decimal() == dec128(sum));
    CHECK((x * y).to_decimal() == dec128(prod));
    CHECK((x * b).to_decimal() == dec128(prod));
  }
}

TEST_CASE("bigcount decimal round trip and comparison") {
  const char* big = "123456789012345678901234567890123456789012345678901234567890";
  BigCount x = BigCount::from_decimal(big);
  CHECK(x.to_decimal() == big);
  BigCount y = x;
  y += 1;
  CHECK(x < y);
  CHECK(y > x);
  CHECK(x != y);
  CHECK(x == BigCount::from_decimal(big));
  CHECK(BigCount(0).to_decimal() == "0");
  CHECK(BigCount(0).is_zero());
  CHECK_THROWS_AS(BigCount::from_decimal("12x"), randdag::MalformedInputError);
}

TEST_CASE("bigcount factorial cross-check") {
  // 25! computed two ways.
  BigCount f(1);
  for (uint64_t i = 2; i <= 25; ++i) f *= i;
  CHECK(f.to_decimal() == "15511210043330985984000000");
  // divide back down
  BigCount g = f;
  for (uint64_t i = 25; i >= 2; --i) g.divexact_u64(i);
  CHECK(g.to_decimal() == "1");
}

TEST_CASE("bigcount add_mul accumulates products") {
  BigCount acc(7);
  BigCount a = BigCount::from_decimal("987654321987654321987654321");
  BigCount b = BigCount::from_decimal("123456789123456789");
  acc.add_mul(a, b);
  BigCount expect = a * b;
  expect += 7;
  CHECK(acc == expect);
}

TEST_CASE("bigcount divexact rejects inexact division") {
  BigCount x(10);
  CHECK_THROWS_AS(x.divexact_u64(3), randdag::InternalError);
}

TEST_CASE("bigcount div_u64 long division") {
  BigCount x = BigCount::from_decimal("340282366920938463463374607431768211457");  // 2^128+1
  BigCount q = x;
  uint64_t r = q.div_u64(3);
  // 2^128+1 = 3 * 113427455640312821154458202477256070486 + ζ
  BigCount back = q * (uint64_t)3;
  back += r;
  CHECK(back == x);
  CHECK(r < 3);
}

TEST_CASE("bigcount bit_length and log2") {
  CHECK(BigCount(0).bit_length() == 0);
  CHECK(BigCount(1).bit_length() == 1);
  CHECK(BigCount(255).bit_length() == 8);
  CHECK(BigCount(256).bit_length() == 9);
  BigCount two_pow_100 = BigCount(1);
  for (int i = 0; i < 100; ++i) two_pow_100 *= 2;
  CHECK(two_pow_100.bit_length() == 101);
  CHECK(two_pow_100.log2() == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(BigCount(1000).log2() == doctest::Approx(9.965784284662087).epsilon(1e-12));
}

TEST_CASE("bigcount to_u64 bounds") {
  CHECK(BigCount(42).to_u64() == 42);
  BigCount big = BigCount::from_decimal("18446744073709551616");  // 2^64
  CHECK_THROWS_AS(big.to_u64(), randdag::OutOfRangeError);
}
