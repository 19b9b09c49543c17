#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "randdag/errors.hpp"
#include "randdag/table_io.hpp"

using namespace randdag;

TEST_CASE("doag cache round-trips to identical query results") {
  auto table = DoagCountTable::build(6, 15, DegreePolicy::all());
  std::stringstream buf;
  write_doag_table_cache(buf, table);
  auto loaded = read_doag_table_cache(buf);
  CHECK(loaded.max_n() == 6);
  CHECK(loaded.max_m() == 15);
  CHECK(loaded.policy() == DegreePolicy::all());
  bool equal = true;
  table.for_each_entry([&](int n, int m, int k, const BigCount& c) {
    equal = equal && loaded.count(n, m, k) == c;
  });
  CHECK(equal);
  CHECK(loaded.count_by_vertices(6).to_u64() == 1336729);
}

TEST_CASE("cache format header and entry ordering") {
  auto table = DoagCountTable::build(3, 3, DegreePolicy::finite_set({0, 1, 2}));
  std::stringstream buf;
  write_doag_table_cache(buf, table);
  std::string line;
  std::getline(buf, line);
  CHECK(line == "randdag-table v1 kind=doag policy=set:0,1,2 maxN=3 maxM=3");
  std::vector<std::string> lines;
  while (std::getline(buf, line)) lines.push_back(line);
  CHECK(std::is_sorted(lines.begin(), lines.end(),
                       [](const std::string& a, const std::string& b) {
                         std::istringstream sa(a), sb(b);
                         int an, am, ak, bn, bm, bk;
                         sa >> an >> am >> ak;
                         sb >> bn >> bm >> bk;
                         return std::tuple(an, am, ak) < std::tuple(bn, bm, bk);
                       }));
}

TEST_CASE("source cache round-trips") {
  auto src = SourceCountTable::build(10);
  std::stringstream buf;
  write_source_table_cache(buf, src);
  auto loaded = read_source_table_cache(buf);
  for (int n = 1; n <= 10; ++n) {
    CHECK(loaded.total(n) == src.total(n));
    for (int k = 1; k <= n; ++k) CHECK(loaded.count(n, k) == src.count(n, k));
  }
}

TEST_CASE("gamma cache round-trips") {
  GammaTable g;
  g.gamma(8, 8);  // fill the rectangle
  std::stringstream buf;
  write_gamma_table_cache(buf, g);
  std::string header;
  std::getline(buf, header);
  CHECK(header == "randdag-table v1 kind=gamma policy=all maxN=8 maxM=8");
  buf.seekg(0);
  auto loaded = read_gamma_table_cache(buf);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) CHECK(loaded.gamma(a, b) == g.gamma(a, b));
}

TEST_CASE("malformed caches are rejected") {
  std::stringstream empty;
  CHECK_THROWS_AS(read_doag_table_cache(empty), CacheError);
  std::stringstream badmagic("something-else v1 kind=doag policy=all maxN=2 maxM=1\n");
  CHECK_THROWS_AS(read_doag_table_cache(badmagic), CacheError);
  std::stringstream badkind("randdag-table v1 kind=source policy=all maxN=2 maxM=1\n");
  CHECK_THROWS_AS(read_doag_table_cache(badkind), CacheError);
  std::stringstream badentry(
      "randdag-table v1 kind=doag policy=all maxN=2 maxM=1\n1 0 1 1\n2 9 1 4\n");
  CHECK_THROWS_AS(read_doag_table_cache(badentry), CacheError);
  std::stringstream garbage(
      "randdag-table v1 kind=doag policy=all maxN=2 maxM=1\n1 0 1 xyz\n");
  CHECK_THROWS_AS(read_doag_table_cache(garbage), CacheError);
}

TEST_CASE("try_load honours the header match rule") {
  std::string path = "/tmp/randdag_cache_test.txt";
  auto table = DoagCountTable::build(4, 6, DegreePolicy::all());
  store_doag_table(path, table);

  auto hit = try_load_doag_table(path, DegreePolicy::all(), 4, 6);
  REQUIRE(hit.has_value());
  CHECK(hit->count_by_vertices(4).to_u64() == 95);

  CHECK_FALSE(try_load_doag_table(path, DegreePolicy::all(), 5, 6).has_value());
  CHECK_FALSE(try_load_doag_table(path, DegreePolicy::positive(), 4, 6).has_value());
  CHECK_FALSE(try_load_doag_table("/tmp/does_not_exist_randdag.txt",
                                  DegreePolicy::all(), 4, 6)
                  .has_value());
  std::remove(path.c_str());
}
