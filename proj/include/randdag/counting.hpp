#ifndef RANDDAG_COUNTING_HPP
#define RANDDAG_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "randdag/bigcount.hpp"
#include "randdag/degree_policy.hpp"

namespace randdag {

struct BuildOptions {
  /// 0 means unbounded.  Checked against the limb storage of all entries.
  uint64_t memory_budget_bytes = 0;
  /// Number of worker threads used within one layer of the build.
  int threads = 1;
};

/// Support bounds shared by all policies: counts are zero unless
/// 1 <= k <= n and n-k <= m <= C(n,2) - C(k,2).
int64_t max_edges(int n, int k);

/// Counting table for ordered-out-edge acyclic graphs keyed by
/// (vertices, edges, sources) under a degree policy.
///
/// Entries are stored per (n, k) as a dense slice over the m-support, which
/// is a contiguous interval.  Construction layer n only reads layer n-1, so
/// rows of one layer may be built concurrently; the result is identical for
/// any thread count.  Tables are immutable after build.
class DoagCountTable {
 public:
  static DoagCountTable build(int max_n, int max_m, DegreePolicy policy,
                              BuildOptions options = {});

  /// D(n, m, k).  Zero outside the support; OutOfRangeError when n or m
  /// exceeds the table bounds while inside it.
  const BigCount& count(int n, int m, int k) const;

  /// D(n) = sum over m and k; requires max_m >= C(n,2).
  BigCount count_by_vertices(int n) const;

  /// D(n, m) = sum over k.
  BigCount count_by_edges(int n, int m) const;

  /// sum over m of D(n, m, k); requires max_m >= C(n,2) - C(k,2).
  BigCount count_by_vertices_sources(int n, int k) const;

  int max_n() const { return max_n_; }
  int max_m() const { return max_m_; }
  const DegreePolicy& policy() const { return policy_; }
  uint64_t byte_size() const { return bytes_; }

  /// Visits nonzero entries ordered by (n, m, k).
  void for_each_entry(
      const std::function<void(int n, int m, int k, const BigCount&)>& fn)
      const;

  /// Rebuilds a table object from cache entries (used by table_io); entries
  /// must be in-support and are trusted otherwise.
  static DoagCountTable from_entries(
      int max_n, int max_m, DegreePolicy policy,
      const std::vector<std::tuple<int, int, int, BigCount>>& entries);

 private:
  DoagCountTable(int max_n, int max_m, DegreePolicy policy)
      : max_n_(max_n), max_m_(max_m), policy_(std::move(policy)) {}

  struct Row {
    int m_lo = 0;
    std::vector<BigCount> v;  // index m - m_lo
  };

  const BigCount* lookup(int n, int m, int k) const;

  int max_n_;
  int max_m_;
  DegreePolicy policy_;
  uint64_t bytes_ = 0;
  std::vector<std::vector<Row>> layers_;  // layers_[n-1][k-1]
};

/// Memoized table of gamma(a, b) = sum_i C(b+i, b) C(a, i) i!, the number of
/// ways one decomposition stage can consume a internal slots and uncover b
/// sources in the edge-agnostic count.  Grows lazily on first query.
class GammaTable {
 public:
  /// gamma(a, b); zero when a < 0 or b < 0.
  const BigCount& gamma(int a, int b);

  /// Bounds of the filled rectangle; -1 before the first query.
  int a_max() const { return (int)g_.size() - 1; }
  int b_max() const { return bmax_; }
  uint64_t byte_size() const { return bytes_; }

  void for_each_entry(
      const std::function<void(int a, int b, const BigCount&)>& fn) const;
  static GammaTable from_entries(
      int a_max, int b_max,
      const std::vector<std::tuple<int, int, BigCount>>& entries);

 private:
  void ensure(int a, int b);
  std::vector<std::vector<BigCount>> g_;
  int bmax_ = -1;
  uint64_t bytes_ = 0;
};

/// Edge-agnostic counts D(n, k) of graphs with n vertices and k sources,
/// built via the gamma recurrence in O(N^3) big-integer operations.
class SourceCountTable {
 public:
  static SourceCountTable build(int max_n, BuildOptions options = {});

  /// D(n, k); zero for k outside [1, n]; OutOfRangeError for n > max_n.
  const BigCount& count(int n, int k) const;
  /// D(n) = sum_k D(n, k).
  const BigCount& total(int n) const;
  /// D*(n) = D(n, 1).
  const BigCount& single_source(int n) const;

  int max_n() const { return max_n_; }
  uint64_t byte_size() const { return bytes_; }

  void for_each_entry(
      const std::function<void(int n, int k, const BigCount&)>& fn) const;

  static SourceCountTable from_entries(
      int max_n, const std::vector<std::tuple<int, int, BigCount>>& entries);

 private:
  explicit SourceCountTable(int max_n) : max_n_(max_n) {}
  int max_n_;
  uint64_t bytes_ = 0;
  std::vector<std::vector<BigCount>> rows_;  // rows_[n-1][k-1]
  std::vector<BigCount> totals_;
};

/// Normalised sequences D(j) sqrt(j) / (sf(j-1) e^{j-1}) and the same for
/// D*(j), for j = 1..n.  Values are produced from exact integer data by a
/// guarded floating conversion with relative error far below 1e-6.
struct NormalizedConstants {
  std::vector<double> d_norm;
  std::vector<double> d_star_norm;
};
NormalizedConstants normalized_constant_sequence(const SourceCountTable& table,
                                                 int n);

}  // namespace randdag

#endif
