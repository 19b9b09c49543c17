#include <doctest.h>

#include <algorithm>

#include "randdag/errors.hpp"
#include "randdag/oracle.hpp"

using namespace randdag;

TEST_CASE("oracle variation enumeration sizes and order") {
  CHECK(oracle::enumerate_variations(0).size() == 1);
  auto v1 = oracle::enumerate_variations(1);
  REQUIRE(v1.size() == 2);
  CHECK(v1[0] == Variation{0});
  CHECK(v1[1] == Variation{1});
  auto v3 = oracle::enumerate_variations(3);
  CHECK(v3.size() == 16);
  CHECK(std::is_sorted(v3.begin(), v3.end()));
  CHECK(std::adjacent_find(v3.begin(), v3.end()) == v3.end());
  CHECK_THROWS_AS(oracle::enumerate_variations(9), SizeLimitError);
}

TEST_CASE("oracle graph enumeration matches the published counts") {
  CHECK(oracle::enumerate_doags(1).size() == 1);
  CHECK(oracle::enumerate_doags(2).size() == 2);
  CHECK(oracle::enumerate_doags(3).size() == 8);
  CHECK(oracle::enumerate_doags(4).size() == 95);
  CHECK(oracle::enumerate_variation_matrices(3).size() == 10);
  CHECK(oracle::enumerate_variation_matrices(4).size() == 160);
  CHECK_THROWS_AS(oracle::enumerate_doags(6), SizeLimitError);

  // deterministic, duplicate-free order
  auto all = oracle::enumerate_doags(4);
  auto key = [](const TransitionMatrix& m) {
    std::vector<int> flat;
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j) flat.push_back(m.at(i, j));
    return flat;
  };
  std::vector<std::vector<int>> keys;
  for (const auto& m : all) keys.push_back(key(m));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("oracle labelled DAG enumeration") {
  CHECK(oracle::enumerate_labelled_dags(1).size() == 1);
  auto d2 = oracle::enumerate_labelled_dags(2);
  CHECK(d2.size() == 3);  // empty, 1->2, 2->1
  CHECK(oracle::enumerate_labelled_dags(3).size() == 25);
  CHECK(oracle::enumerate_labelled_dags(4).size() == 543);
  CHECK_THROWS_AS(oracle::enumerate_labelled_dags(5), SizeLimitError);
}

TEST_CASE("chi-square harness behaves at the extremes") {
  // perfectly uniform counts: p close to 1
  std::vector<uint64_t> uniform(8, 1000);
  auto r = oracle::chi_square_uniformity(uniform, 8);
  CHECK(r.p_value > 0.999);
  CHECK(r.dof == 7);

  // all mass on one of 8 classes, 800 draws: overwhelming rejection
  std::vector<uint64_t> degenerate(8, 0);
  degenerate[0] = 800;
  auto bad = oracle::chi_square_uniformity(degenerate, 8);
  CHECK(bad.p_value < 1e-6);

  // short vectors count missing classes as zeros
  std::vector<uint64_t> partial = {400, 400};
  auto part = oracle::chi_square_uniformity(partial, 4);
  CHECK(part.p_value < 1e-6);

  CHECK_THROWS_AS(oracle::chi_square_uniformity(std::vector<uint64_t>{3, 2}, 2),
                  UnderSampledError);
}

TEST_CASE("two-sample chi-square accepts equal and rejects disjoint") {
  std::vector<uint64_t> a = {500, 510, 490, 500};
  std::vector<uint64_t> b = {505, 495, 500, 500};
  CHECK(oracle::chi_square_two_sample(a, b).p_value > 0.5);
  std::vector<uint64_t> c = {1000, 0, 0, 1000};
  std::vector<uint64_t> d = {0, 1000, 1000, 0};
  CHECK(oracle::chi_square_two_sample(c, d).p_value < 1e-9);
}
