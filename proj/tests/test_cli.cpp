#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the CLI with stdout captured; stderr goes to /dev/null.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string out_path =
      "/tmp/randdag_cli_out_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(RANDDAG_CLI_PATH) + " " + args + " > " +
                    out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("count doag reproduces the published values") {
  CHECK(run_cli("count doag --n 6").out == "1336729\n");
  CHECK(run_cli("count doag --n 4 --by-edges").out == "1 3 8 17 27 27 12\n");
  CHECK(run_cli("count doag --n 5 --k 1 --policy positive").out == "2103\n");
  CHECK(run_cli("count doag --n 4 --k 1 --policy set:0,1,2").out == "23\n");
  CHECK(run_cli("count doag --n 4 --m 3").out == "17\n");
  CHECK(run_cli("count doag --n 4 --m 3 --by-edges").out ==
        "1 3 8 17 27 27 12\n");
}

TEST_CASE("count dag matches a brute-force pinned value") {
  auto all = run_cli("count dag --n 3");
  CHECK(all.out == "25\n");
  // 9 of the 25 DAGs on 3 labelled vertices have 2 edges and 1 source
  // (value frozen from the enumeration oracle).
  auto r = run_cli("count dag --n 3 --m 2 --k 1");
  CHECK(r.out == "9\n");
}

TEST_CASE("sample doag singleton and error paths") {
  auto ok = run_cli("sample doag --n 1 --m 0 --k 1 --format matrix --seed 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "1\n0\n");
  CHECK(run_cli("sample doag --n 3 --m 7 --k 1 --seed 3").exit_code == 4);
  CHECK(run_cli("sample doag --n 3 --m 2 --k 9 --seed 3").exit_code == 4);
  CHECK(run_cli("sample doag").exit_code == 2);
  CHECK(run_cli("sample doag --n 3 --k 1 --seed 1").exit_code == 2);
  CHECK(run_cli("sample doag --n 3 --format nonsense").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("count doag --n 3 --policy wat").exit_code == 2);
}

TEST_CASE("fixed seeds give byte-identical output") {
  std::string cmd = "sample doag-fast --n 60 --seed 7 --count 3 --format edgelist";
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);

  auto c = run_cli("sample dag --n 5 --m 6 --seed 11 --count 4");
  auto d = run_cli("sample dag --n 5 --m 6 --seed 11 --count 4");
  CHECK(c.out == d.out);

  // job fan-out must not change the bytes
  auto j1 = run_cli("sample doag --n 6 --seed 5 --count 8 --jobs 1");
  auto j3 = run_cli("sample doag --n 6 --seed 5 --count 8 --jobs 3");
  CHECK(j1.out == j3.out);
  CHECK(j1.exit_code == 0);
}

TEST_CASE("dot output carries the source prefix comment") {
  auto r = run_cli("sample doag --n 4 --m 3 --k 2 --seed 1 --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph {") != std::string::npos);
  CHECK(r.out.find("// sources: 1..2") != std::string::npos);
  CHECK(r.out.find("label=") != std::string::npos);
  auto dag = run_cli("sample dag --n 3 --m 2 --seed 2 --format dot");
  CHECK(dag.out.find("label=") == std::string::npos);
}

TEST_CASE("stats constant endpoints") {
  auto r = run_cli("stats constant --n 1");
  CHECK(r.out == "j,d_norm,d_star_norm\n1,1.000000,1.000000\n");
  auto r20 = run_cli("stats constant --n 20");
  CHECK(r20.exit_code == 0);
  // last line starts with "20," and both columns parse as doubles
  auto pos = r20.out.rfind("\n20,");
  REQUIRE(pos != std::string::npos);
}

TEST_CASE("stats edges emits a CSV summary with a dense mean") {
  auto r = run_cli("stats edges --n 40 --samples 100 --seed 5");
  CHECK(r.exit_code == 0);
  REQUIRE(r.out.rfind("n,samples,mean_edges", 0) == 0);
  std::istringstream is(r.out);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  int n, samples;
  double mean;
  REQUIRE(std::sscanf(row.c_str(), "%d,%d,%lf", &n, &samples, &mean) == 3);
  CHECK(n == 40);
  CHECK(samples == 100);
  CHECK(mean >= 40.0 * 39.0 / 2.0 - 10.0 * 40.0);
}

TEST_CASE("cache round-trip through the CLI and tamper detection") {
  std::string path = "/tmp/randdag_cli_cache.txt";
  std::remove(path.c_str());
  auto first = run_cli("count doag --n 5 --cache " + path);
  CHECK(first.out == "4858\n");
  auto second = run_cli("count doag --n 5 --cache " + path);
  CHECK(second.out == "4858\n");
  CHECK(slurp(path).rfind("randdag-table v1 kind=doag policy=all maxN=5 maxM=10",
                          0) == 0);

  CHECK(run_cli("selftest --quick --cache " + path).exit_code == 0);

  // corrupt one digit and expect the named check to fail
  std::string content = slurp(path);
  auto pos = content.rfind(" 288\n");
  REQUIRE(pos != std::string::npos);
  content.replace(pos, 5, " 289\n");
  std::ofstream(path, std::ios::binary) << content;
  auto tampered = run_cli("selftest --quick --cache " + path);
  CHECK(tampered.exit_code == 1);
  CHECK(tampered.out.find("cache-verify: FAIL") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("RANDDAG_CACHE_DIR provides a default cache location") {
  std::string dir = "/tmp/randdag_cache_dir_test";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  std::string cmd = "RANDDAG_CACHE_DIR=" + dir + " " + RANDDAG_CLI_PATH +
                    " count doag --n 4 > /dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::string expect_file = dir + "/doag-all-n4-m6.cache";
  std::ifstream in(expect_file);
  REQUIRE((bool)in);
  std::string header;
  std::getline(in, header);
  CHECK(header == "randdag-table v1 kind=doag policy=all maxN=4 maxM=6");
  // second run hits the cache and still prints the right value
  std::string out_path = "/tmp/randdag_cache_dir_out.txt";
  cmd = "RANDDAG_CACHE_DIR=" + dir + " " + RANDDAG_CLI_PATH +
        " count doag --n 4 > " + out_path + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out_path) == "95\n");
  std::remove(out_path.c_str());
  CHECK(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("selftest quick passes") {
  auto r = run_cli("selftest --quick");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("selftest: all checks passed") != std::string::npos);
}

TEST_CASE("m-only sampling restricts the policy and hits the edge count") {
  auto r = run_cli(
      "sample doag --m 12 --policy max:3 --seed 17 --format edgelist");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.out);
  int n = 0;
  bool has_n = (bool)(is >> n);
  REQUIRE(has_n);
  CHECK(n >= 5);  // 12 edges with degree <= 3 needs at least 5 vertices
  int src, dst, rank, edges = 0;
  std::vector<int> degree(n, 0);
  while (is >> src >> dst >> rank) {
    ++edges;
    ++degree[src - 1];
  }
  CHECK(edges == 12);
  for (int v = 0; v < n; ++v) CHECK(degree[v] <= 3);
}
