// Command-line frontend: exact counting, uniform sampling, statistics and
// self-tests for ordered-out-edge acyclic graphs and labelled DAGs.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "randdag/counting.hpp"
#include "randdag/errors.hpp"
#include "randdag/graph_model.hpp"
#include "randdag/labelled_dag.hpp"
#include "randdag/oracle.hpp"
#include "randdag/sampler_recursive.hpp"
#include "randdag/sampler_rejection.hpp"
#include "randdag/table_io.hpp"
#include "randdag/variations.hpp"

using namespace randdag;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitRange = 3;
constexpr int kExitEmptyClass = 4;

uint64_t resolve_seed(const std::optional<uint64_t>& seed_flag) {
  if (seed_flag) return *seed_flag;
  std::random_device rd;
  uint64_t seed = ((uint64_t)rd() << 32) ^ rd();
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

std::string sanitize_for_filename(std::string s) {
  for (char& c : s) {
    if (c == ':') c = '-';
    if (c == ',') c = '_';
  }
  return s;
}

// Resolves the cache path: an explicit --cache wins; otherwise a file in
// RANDDAG_CACHE_DIR named after the table parameters; otherwise none.
std::optional<std::string> cache_path(const std::string& flag,
                                      const DegreePolicy& policy, int max_n,
                                      int max_m) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("RANDDAG_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::ostringstream os;
  os << dir << "/doag-" << sanitize_for_filename(policy.spec_string()) << "-n"
     << max_n << "-m" << max_m << ".cache";
  return os.str();
}

DoagCountTable load_or_build_doag_table(const DegreePolicy& policy, int max_n,
                                        int max_m,
                                        const std::string& cache_flag) {
  auto path = cache_path(cache_flag, policy, max_n, max_m);
  if (path) {
    auto cached = try_load_doag_table(*path, policy, max_n, max_m);
    if (cached) return std::move(*cached);
  }
  DoagCountTable table = DoagCountTable::build(max_n, max_m, policy);
  if (path) {
    try {
      store_doag_table(*path, table);
    } catch (const CacheError& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  return table;
}

struct CountArgs {
  int n = 0;
  int m = -1;
  int k = -1;
  std::string policy = "all";
  std::string cache;
  bool by_edges = false;
};

int run_count_doag(const CountArgs& args) {
  DegreePolicy policy = DegreePolicy::parse(args.policy);
  int max_m = args.m >= 0 && !args.by_edges ? args.m : (int)max_edges(args.n, 1);
  auto table = load_or_build_doag_table(policy, args.n, max_m, args.cache);
  if (args.by_edges) {
    std::vector<std::string> cells;
    for (int m = 0; m <= (int)max_edges(args.n, 1); ++m)
      cells.push_back(table.count_by_edges(args.n, m).to_decimal());
    while (cells.size() > 1 && cells.back() == "0") cells.pop_back();
    for (size_t i = 0; i < cells.size(); ++i)
      std::cout << (i ? " " : "") << cells[i];
    std::cout << "\n";
    return 0;
  }
  BigCount result;
  if (args.m >= 0 && args.k >= 0) {
    result = table.count(args.n, args.m, args.k);
  } else if (args.m >= 0) {
    result = table.count_by_edges(args.n, args.m);
  } else if (args.k >= 0) {
    result = table.count_by_vertices_sources(args.n, args.k);
  } else {
    result = table.count_by_vertices(args.n);
  }
  std::cout << result.to_decimal() << "\n";
  return 0;
}

int run_count_dag(const CountArgs& args) {
  DegreePolicy policy = DegreePolicy::parse(args.policy);
  int max_m = args.m >= 0 ? args.m : (int)max_edges(args.n, 1);
  auto table = DagCountTable::build(args.n, max_m, policy);
  BigCount result;
  if (args.m >= 0 && args.k >= 0) {
    result = table.count(args.n, args.m, args.k);
  } else if (args.m >= 0) {
    for (int k = 1; k <= args.n; ++k) result += table.count(args.n, args.m, k);
  } else if (args.k >= 0) {
    for (int m = 0; m <= max_m; ++m) result += table.count(args.n, m, args.k);
  } else {
    result = table.count_total(args.n);
  }
  std::cout << result.to_decimal() << "\n";
  return 0;
}

struct SampleArgs {
  int n = -1;
  int m = -1;
  int k = -1;
  int max_n = -1;
  std::string policy = "all";
  std::string format = "edgelist";
  std::string method = "fast";
  std::string cache;
  std::optional<uint64_t> seed;
  int count = 1;
  int jobs = 1;
};

std::string render_doag(const Doag& d, const std::string& format) {
  if (format == "matrix") return matrix_to_text(encode(d));
  if (format == "dot") return doag_to_dot(d);
  return doag_to_edgelist(d);
}

// Emits `count` independent samples; worker w handles indices w, w+jobs, ...
// with the stream seed derived from (seed, index), so the bytes are the same
// for any job count.
void emit_samples(int count, int jobs, uint64_t seed,
                  const std::function<std::string(RngStream&)>& one) {
  std::vector<std::string> out((size_t)count);
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) {
      RngStream rng = RngStream::derived(seed, (uint64_t)i);
      out[i] = one(rng);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < count; i += jobs) {
          RngStream rng = RngStream::derived(seed, (uint64_t)i);
          out[i] = one(rng);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& s : out) std::cout << s;
}

int run_sample_doag(const SampleArgs& args) {
  DegreePolicy policy = DegreePolicy::parse(args.policy);
  if (args.n < 0 && args.m < 0)
    throw MalformedInputError("sample doag: need --n or --m");
  if (args.k >= 0 && args.m < 0)
    throw MalformedInputError("sample doag: --k requires --m");
  uint64_t seed = resolve_seed(args.seed);

  if (args.n < 0) {
    // Vertex count left free: degree 0 is dropped from the policy so that
    // the class stays finite, then n is drawn from the class masses.
    DegreePolicy eff = policy.intersect_positive();
    if (eff != policy)
      std::cerr << "note: --m without --n restricts the policy to positive "
                   "out-degrees ("
                << eff.spec_string() << ")\n";
    int hi = args.max_n > 0 ? std::min(args.max_n, args.m + 1) : args.m + 1;
    auto table = load_or_build_doag_table(eff, hi, args.m, args.cache);
    BigCount total;
    for (int n = 1; n <= hi; ++n) total += table.count_by_edges(n, args.m);
    if (total.is_zero())
      throw EmptyClassError("sample doag: no graph has m=" +
                            std::to_string(args.m) + " with n <= " +
                            std::to_string(hi));
    emit_samples(args.count, args.jobs, seed, [&](RngStream& rng) {
      BigCount r = rng.uniform_big_below(total);
      BigCount acc;
      for (int n = 1; n <= hi; ++n) {
        acc += table.count_by_edges(n, args.m);
        if (acc > r)
          return render_doag(sample_doag_vertices_edges(rng, table, n, args.m),
                             args.format);
      }
      throw InternalError("sample doag: vertex-count masses inconsistent");
    });
    return 0;
  }

  int max_m = args.m >= 0 ? args.m : (int)max_edges(args.n, 1);
  auto table = load_or_build_doag_table(policy, args.n, max_m, args.cache);
  emit_samples(args.count, args.jobs, seed, [&](RngStream& rng) {
    Doag d = args.m < 0 ? sample_doag_vertices(rng, table, args.n)
             : args.k < 0
                 ? sample_doag_vertices_edges(rng, table, args.n, args.m)
                 : sample_doag(rng, table, args.n, args.m, args.k);
    return render_doag(d, args.format);
  });
  return 0;
}

int run_sample_doag_fast(const SampleArgs& args) {
  if (args.n < 1)
    throw MalformedInputError("sample doag-fast: need --n >= 1");
  uint64_t seed = resolve_seed(args.seed);
  RejectionMethod method = RejectionMethod::fast;
  if (args.method == "naive") method = RejectionMethod::naive;
  if (args.method == "auto") method = RejectionMethod::auto_pick;
  emit_samples(args.count, args.jobs, seed, [&](RngStream& rng) {
    return render_doag(sample_doag_by_vertices(rng, args.n, method),
                       args.format);
  });
  return 0;
}

int run_sample_dag(const SampleArgs& args) {
  if (args.n < 1) throw MalformedInputError("sample dag: need --n >= 1");
  if (args.k >= 0 && args.m < 0)
    throw MalformedInputError("sample dag: --k requires --m");
  DegreePolicy policy = DegreePolicy::parse(args.policy);
  uint64_t seed = resolve_seed(args.seed);
  int max_m = args.m >= 0 ? args.m : (int)max_edges(args.n, 1);
  auto table = DagCountTable::build(args.n, max_m, policy);
  emit_samples(args.count, args.jobs, seed, [&](RngStream& rng) {
    LabelledDag d = args.m < 0 ? sample_dag_vertices(rng, table, args.n)
                    : args.k < 0
                        ? sample_dag_vertices_edges(rng, table, args.n, args.m)
                        : sample_dag(rng, table, args.n, args.m, args.k);
    return args.format == "dot" ? dag_to_dot(d) : dag_to_edgelist(d);
  });
  return 0;
}

int run_stats_constant(int n) {
  auto table = SourceCountTable::build(n);
  auto seq = normalized_constant_sequence(table, n);
  std::cout << "j,d_norm,d_star_norm\n";
  char buf[96];
  for (int j = 1; j <= n; ++j) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f\n", j, seq.d_norm[j - 1],
                  seq.d_star_norm[j - 1]);
    std::cout << buf;
  }
  return 0;
}

int run_stats_edges(int n, int samples,
                    const std::optional<uint64_t>& seed_flag) {
  uint64_t seed = resolve_seed(seed_flag);
  RngStream rng(seed);
  uint64_t min_e = ~0ull, max_e = 0;
  double sum = 0, sum2 = 0;
  for (int t = 0; t < samples; ++t) {
    TransitionMatrix m = sample_doag_fast(rng, n);
    uint64_t edges = 0;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j) edges += m.at(i, j) > 0;
    min_e = std::min(min_e, edges);
    max_e = std::max(max_e, edges);
    sum += (double)edges;
    sum2 += (double)edges * (double)edges;
  }
  double mean = sum / samples;
  double var = samples > 1 ? (sum2 - samples * mean * mean) / (samples - 1) : 0;
  std::cout << "n,samples,mean_edges,min_edges,max_edges,stddev_edges\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d,%d,%.3f,%llu,%llu,%.3f\n", n, samples,
                mean, (unsigned long long)min_e, (unsigned long long)max_e,
                var > 0 ? std::sqrt(var) : 0.0);
  std::cout << buf;
  return 0;
}

// ---------------------------------------------------------------------------
// selftest

struct CheckReport {
  int failures = 0;
  void operator()(const std::string& name, bool ok,
                  const std::string& detail = "") {
    std::cout << "check " << name << ": " << (ok ? "ok" : "FAIL") << detail
              << "\n";
    if (!ok) ++failures;
  }
};

std::pair<int, int> matrix_edges_sources(const TransitionMatrix& m) {
  int edges = 0, sources = 0;
  for (int j = 0; j < m.n(); ++j) {
    bool empty = true;
    for (int i = 0; i < m.n(); ++i)
      if (m.at(i, j) > 0) {
        ++edges;
        empty = false;
      }
    if (empty) ++sources;
  }
  return {edges, sources};
}

bool matrix_policy_class(const TransitionMatrix& m,
                         const DegreePolicy& policy) {
  int zero_rows = 0;
  for (int i = 0; i < m.n(); ++i) {
    int deg = 0;
    for (int j = 0; j < m.n(); ++j) deg += m.at(i, j) > 0;
    if (deg == 0) {
      ++zero_rows;
      continue;
    }
    if (!policy.contains(deg)) return false;
  }
  return policy.contains(0) || zero_rows == 1;
}

int run_selftest(bool quick, const std::string& cache_file) {
  CheckReport report;
  const int doag_cap = quick ? 3 : 4;

  {
    bool ok = true;
    std::string detail;
    for (const auto& policy : {DegreePolicy::all(), DegreePolicy::positive(),
                               DegreePolicy::bounded(2)}) {
      auto table = DoagCountTable::build(doag_cap, (int)max_edges(doag_cap, 1),
                                         policy);
      for (int n = 1; n <= doag_cap && ok; ++n) {
        std::map<std::pair<int, int>, uint64_t> counts;
        for (const auto& m : oracle::enumerate_doags(n))
          if (matrix_policy_class(m, policy))
            ++counts[matrix_edges_sources(m)];
        for (int m = 0; m <= (int)max_edges(n, 1) && ok; ++m)
          for (int k = 1; k <= n; ++k) {
            auto it = counts.find({m, k});
            uint64_t expect = it == counts.end() ? 0 : it->second;
            if (table.count(n, m, k).to_u64() != expect) {
              ok = false;
              detail = " (policy " + policy.spec_string() + ", n=" +
                       std::to_string(n) + ")";
              break;
            }
          }
      }
    }
    report("counting-doag-oracle", ok, detail);
  }

  {
    int cap = quick ? 6 : 10;
    auto table = DoagCountTable::build(cap, (int)max_edges(cap, 1),
                                       DegreePolicy::all());
    auto src = SourceCountTable::build(cap);
    bool ok = true;
    for (int n = 1; n <= cap; ++n)
      for (int k = 1; k <= n; ++k)
        ok = ok && table.count_by_vertices_sources(n, k) == src.count(n, k);
    report("counting-source-cross", ok);
  }

  {
    int cap = quick ? 3 : 4;
    auto table = DagCountTable::build(cap, (int)max_edges(cap, 1),
                                      DegreePolicy::all());
    bool ok = true;
    for (int n = 1; n <= cap; ++n) {
      std::map<std::pair<int, int>, uint64_t> counts;
      for (const auto& d : oracle::enumerate_labelled_dags(n))
        ++counts[dag_edges_sources(d)];
      for (int m = 0; m <= (int)max_edges(n, 1); ++m)
        for (int k = 1; k <= n; ++k) {
          auto it = counts.find({m, k});
          uint64_t expect = it == counts.end() ? 0 : it->second;
          ok = ok && table.count(n, m, k).to_u64() == expect;
        }
    }
    report("counting-dag-oracle", ok);
  }

  {
    bool ok = true;
    for (int n = 3; n <= (quick ? 3 : 4); ++n) {
      auto all = oracle::enumerate_variation_matrices(n);
      size_t valid = 0;
      for (const auto& m : all) {
        if (!is_valid_transition_matrix(m)) continue;
        ++valid;
        ok = ok && encode(decode(m)) == m;
      }
      size_t expect = n == 3 ? 8 : 95;
      size_t expect_all = n == 3 ? 10 : 160;
      ok = ok && valid == expect && all.size() == expect_all;
    }
    report("bijection-small", ok);
  }

  {
    bool ok = true;
    for (int n = 0; n <= (quick ? 4 : 6); ++n)
      ok = ok && variation_count(n).to_u64() ==
                     oracle::enumerate_variations(n).size();
    report("variations-count", ok);
  }

  {
    int n = quick ? 3 : 4, m = quick ? 2 : 3, k = quick ? 1 : 2;
    auto table = DoagCountTable::build(n, (int)max_edges(n, 1),
                                       DegreePolicy::all());
    std::set<std::string> classkeys;
    for (const auto& mat : oracle::enumerate_doags(n))
      if (matrix_edges_sources(mat) == std::pair<int, int>{m, k})
        classkeys.insert(matrix_to_text(mat));
    RngStream rng(1001);
    std::map<std::string, uint64_t> seen;
    int draws = (int)classkeys.size() * 150;
    for (int t = 0; t < draws; ++t)
      ++seen[matrix_to_text(encode(sample_doag(rng, table, n, m, k)))];
    bool ok = seen.size() == classkeys.size();
    double p =
        ok ? oracle::chi_square_uniformity(seen, classkeys.size()).p_value : 0.0;
    ok = ok && p > 0.001;
    report("uniformity-recursive", ok);
  }

  {
    RngStream rn(1002), rf(1003);
    std::map<std::string, uint64_t> naive_seen, fast_seen;
    const int draws = quick ? 20000 : 100000;
    for (int t = 0; t < draws; ++t) {
      ++naive_seen[matrix_to_text(sample_doag_naive(rn, 3))];
      ++fast_seen[matrix_to_text(sample_doag_fast(rf, 3))];
    }
    bool ok = naive_seen.size() == 8 && fast_seen.size() == 8;
    if (ok) {
      std::vector<uint64_t> a, b;
      for (auto& [key, c] : naive_seen) {
        a.push_back(c);
        b.push_back(fast_seen.at(key));
      }
      ok = oracle::chi_square_uniformity(naive_seen, 8).p_value > 0.001 &&
           oracle::chi_square_uniformity(fast_seen, 8).p_value > 0.001 &&
           oracle::chi_square_two_sample(a, b).p_value > 0.001;
    }
    report("uniformity-rejection", ok);
  }

  {
    auto table = DagCountTable::build(3, 3, DegreePolicy::all());
    RngStream rng(1004);
    std::map<std::string, uint64_t> seen;
    const int draws = quick ? 50000 : 250000;
    for (int t = 0; t < draws; ++t)
      ++seen[dag_to_edgelist(sample_dag_vertices(rng, table, 3))];
    bool ok = seen.size() == 25 &&
              oracle::chi_square_uniformity(seen, 25).p_value > 0.001;
    report("uniformity-labelled", ok);
  }

  {
    bool ok = true;
    std::string path = "/tmp/randdag-selftest-" +
                       std::to_string((unsigned)::getpid()) + ".cache";
    try {
      auto table = DoagCountTable::build(4, 6, DegreePolicy::all());
      store_doag_table(path, table);
      auto loaded = try_load_doag_table(path, DegreePolicy::all(), 4, 6);
      ok = loaded.has_value();
      if (ok)
        table.for_each_entry([&](int n, int m, int k, const BigCount& c) {
          ok = ok && loaded->count(n, m, k) == c;
        });
    } catch (const Error&) {
      ok = false;
    }
    std::remove(path.c_str());
    report("cache-roundtrip", ok);
  }

  if (!cache_file.empty()) {
    bool ok = true;
    std::string detail;
    try {
      std::ifstream in(cache_file);
      if (!in) throw CacheError("cannot open " + cache_file);
      auto loaded = read_doag_table_cache(in);
      auto fresh =
          DoagCountTable::build(loaded.max_n(), loaded.max_m(), loaded.policy());
      fresh.for_each_entry([&](int n, int m, int k, const BigCount& c) {
        ok = ok && loaded.count(n, m, k) == c;
      });
      size_t fresh_entries = 0, loaded_entries = 0;
      fresh.for_each_entry(
          [&](int, int, int, const BigCount&) { ++fresh_entries; });
      loaded.for_each_entry(
          [&](int, int, int, const BigCount&) { ++loaded_entries; });
      ok = ok && fresh_entries == loaded_entries;
      if (!ok) detail = " (cache content does not match a fresh build)";
    } catch (const Error& e) {
      ok = false;
      detail = std::string(" (") + e.what() + ")";
    }
    report("cache-verify", ok, detail);
  }

  std::cout << (report.failures == 0 ? "selftest: all checks passed"
                                     : "selftest: FAILED")
            << "\n";
  return report.failures == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting and provably uniform sampling of "
               "ordered-out-edge acyclic graphs and labelled DAGs"};
  app.require_subcommand(1);

  std::function<int()> action;

  // count
  auto* count = app.add_subcommand("count", "print exact counts");
  count->require_subcommand(1);
  CountArgs count_args;
  {
    auto* sub = count->add_subcommand("doag", "count ordered graphs");
    sub->add_option("--n", count_args.n, "vertex count")->required();
    sub->add_option("--m", count_args.m, "edge count");
    sub->add_option("--k", count_args.k, "source count");
    sub->add_option("--policy", count_args.policy,
                    "out-degree policy: all | positive | max:<d> | set:d1,d2,...");
    sub->add_flag("--by-edges", count_args.by_edges,
                  "print the whole row of counts by edge count");
    sub->add_option("--cache", count_args.cache,
                    "cache file for the counting table");
    sub->callback([&] { action = [&] { return run_count_doag(count_args); }; });
  }
  {
    auto* sub = count->add_subcommand("dag", "count labelled DAGs");
    sub->add_option("--n", count_args.n, "vertex count")->required();
    sub->add_option("--m", count_args.m, "edge count");
    sub->add_option("--k", count_args.k, "source count");
    sub->add_option("--policy", count_args.policy, "out-degree policy");
    sub->callback([&] { action = [&] { return run_count_dag(count_args); }; });
  }

  // sample
  auto* sample = app.add_subcommand("sample", "emit uniform random graphs");
  sample->require_subcommand(1);
  SampleArgs sample_args;
  {
    auto* sub =
        sample->add_subcommand("doag", "exact-distribution recursive sampler");
    sub->add_option("--n", sample_args.n, "vertex count");
    sub->add_option("--m", sample_args.m, "edge count");
    sub->add_option("--k", sample_args.k, "source count");
    sub->add_option("--max-n", sample_args.max_n,
                    "cap on the vertex count when only --m is given");
    sub->add_option("--policy", sample_args.policy, "out-degree policy");
    sub->add_option("--seed", sample_args.seed, "RNG seed");
    sub->add_option("--count", sample_args.count, "number of samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", sample_args.format, "dot | matrix | edgelist")
        ->check(CLI::IsMember({"dot", "matrix", "edgelist"}));
    sub->add_option("--jobs", sample_args.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cache", sample_args.cache, "counting-table cache file");
    sub->callback(
        [&] { action = [&] { return run_sample_doag(sample_args); }; });
  }
  {
    auto* sub = sample->add_subcommand(
        "doag-fast", "table-free rejection sampler (vertex count only)");
    sub->add_option("--n", sample_args.n, "vertex count")->required();
    sub->add_option("--method", sample_args.method, "naive | fast | auto")
        ->check(CLI::IsMember({"naive", "fast", "auto"}));
    sub->add_option("--seed", sample_args.seed, "RNG seed");
    sub->add_option("--count", sample_args.count, "number of samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", sample_args.format, "dot | matrix | edgelist")
        ->check(CLI::IsMember({"dot", "matrix", "edgelist"}));
    sub->add_option("--jobs", sample_args.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->callback(
        [&] { action = [&] { return run_sample_doag_fast(sample_args); }; });
  }
  {
    auto* sub = sample->add_subcommand("dag", "labelled-DAG sampler");
    sub->add_option("--n", sample_args.n, "vertex count")->required();
    sub->add_option("--m", sample_args.m, "edge count");
    sub->add_option("--k", sample_args.k, "source count");
    sub->add_option("--policy", sample_args.policy, "out-degree policy");
    sub->add_option("--seed", sample_args.seed, "RNG seed");
    sub->add_option("--count", sample_args.count, "number of samples")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", sample_args.format, "dot | edgelist")
        ->check(CLI::IsMember({"dot", "edgelist"}));
    sub->add_option("--jobs", sample_args.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->callback([&] { action = [&] { return run_sample_dag(sample_args); }; });
  }

  // stats
  auto* stats = app.add_subcommand("stats", "numerical summaries as CSV");
  stats->require_subcommand(1);
  int stats_n = 0;
  int stats_samples = 1000;
  std::optional<uint64_t> stats_seed;
  {
    auto* sub =
        stats->add_subcommand("constant", "normalised counting sequences");
    sub->add_option("--n", stats_n, "largest size")->required();
    sub->callback(
        [&] { action = [&] { return run_stats_constant(stats_n); }; });
  }
  {
    auto* sub = stats->add_subcommand(
        "edges", "empirical edge counts of the fast sampler");
    sub->add_option("--n", stats_n, "vertex count")->required();
    sub->add_option("--samples", stats_samples, "sample count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", stats_seed, "RNG seed");
    sub->callback([&] {
      action = [&] {
        return run_stats_edges(stats_n, stats_samples, stats_seed);
      };
    });
  }

  // selftest
  bool quick = false;
  std::string selftest_cache;
  {
    auto* sub = app.add_subcommand("selftest",
                                   "oracle-equivalence and uniformity checks");
    sub->add_flag("--quick", quick, "small sizes only");
    sub->add_option("--cache", selftest_cache,
                    "verify a cache file against a fresh build");
    sub->callback(
        [&] { action = [&] { return run_selftest(quick, selftest_cache); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    return action();
  } catch (const EmptyClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmptyClass;
  } catch (const OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRange;
  } catch (const MalformedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
