#ifndef RANDDAG_LABELLED_DAG_HPP
#define RANDDAG_LABELLED_DAG_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "randdag/bigcount.hpp"
#include "randdag/counting.hpp"
#include "randdag/degree_policy.hpp"
#include "randdag/rng.hpp"

namespace randdag {

/// Classical vertex-labelled DAG: a set of ordered pairs over 0..n-1 with no
/// directed cycle.  Edges carry no ordering; they are kept sorted.
struct LabelledDag {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const LabelledDag&) const = default;
};

/// Counting table for labelled DAGs keyed by (vertices, edges, sources).
///
/// Storage holds the pointed counts (k times the plain count), which satisfy
/// a subtraction- and division-free recurrence; plain counts are materialised
/// by an exact division on demand.
class DagCountTable {
 public:
  static DagCountTable build(int max_n, int max_m, DegreePolicy policy,
                             BuildOptions options = {});

  /// A(n, m, k).  Zero outside the support; OutOfRangeError past the bounds.
  BigCount count(int n, int m, int k) const;
  /// k * A(n, m, k), the stored pointed count.
  const BigCount& pointed_count(int n, int m, int k) const;

  /// Sum over m and k of A; requires max_m >= C(n,2).
  BigCount count_total(int n) const;
  /// Sum over m of A(n, m, 1); the table must be built with a policy that
  /// excludes 0 (unique sink), giving single-source single-sink DAGs.
  BigCount count_single_source_sink(int n) const;

  int max_n() const { return max_n_; }
  int max_m() const { return max_m_; }
  const DegreePolicy& policy() const { return policy_; }
  uint64_t byte_size() const { return bytes_; }

 private:
  DagCountTable(int max_n, int max_m, DegreePolicy policy)
      : max_n_(max_n), max_m_(max_m), policy_(std::move(policy)) {}

  struct Row {
    int m_lo = 0;
    std::vector<BigCount> v;
  };
  const BigCount* lookup(int n, int m, int k) const;

  int max_n_;
  int max_m_;
  DegreePolicy policy_;
  uint64_t bytes_ = 0;
  std::vector<std::vector<Row>> layers_;  // pointed counts
};

/// Exactly uniform labelled DAG with n vertices, m edges, k sources.  Each
/// stage picks the split against the pointed-count weights, inserts a source
/// with a uniform label and shifts the labels at or above it.
LabelledDag sample_dag(RngStream& rng, const DagCountTable& table, int n,
                       int m, int k);

/// Marginal variants drawing the free parameters from the plain-count masses.
LabelledDag sample_dag_vertices_edges(RngStream& rng,
                                      const DagCountTable& table, int n,
                                      int m);
LabelledDag sample_dag_vertices(RngStream& rng, const DagCountTable& table,
                                int n);

/// Formats: edge list is `n` then `u v` lines (1-based, sorted); DOT carries
/// no edge-order labels.
std::string dag_to_edgelist(const LabelledDag& d);
LabelledDag dag_from_edgelist(std::istream& in);
std::string dag_to_dot(const LabelledDag& d);

/// (edges, sources) of a labelled DAG, for grouping and tests.
std::pair<int, int> dag_edges_sources(const LabelledDag& d);

}  // namespace randdag

#endif
