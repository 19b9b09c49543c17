#ifndef RANDDAG_GRAPH_MODEL_HPP
#define RANDDAG_GRAPH_MODEL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace randdag {

/// Ordered-out-edge acyclic graph in decomposition-canonical form.
///
/// Vertices are indexed 0..n-1 in the order the vertex-by-vertex
/// decomposition consumes them (a BFS-based topological sort), so every edge
/// points from a lower to a higher index and the sources are a prefix of the
/// index range.  `out[v]` lists the targets of v in out-edge order.
struct Doag {
  int n = 0;
  std::vector<std::vector<int>> out;
};

struct DoagStats {
  int vertices = 0;
  int edges = 0;
  int sources = 0;
  int sinks = 0;
  int max_out_degree = 0;
  bool operator==(const DoagStats&) const = default;
};

/// Strictly upper-triangular integer matrix; entry (i, j) > 0 holds the rank
/// of edge i->j among i's out-edges.  Rows are 0-based here.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(int n) : n_(n), a_((size_t)n * n, 0) {}

  int n() const { return n_; }
  int32_t at(int i, int j) const { return a_[(size_t)i * n_ + j]; }
  void set(int i, int j, int32_t v) { a_[(size_t)i * n_ + j] = v; }

  bool operator==(const TransitionMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int32_t> a_;
};

/// Information removed by one decomposition step, sufficient to rebuild the
/// graph: the number s of sources the step uncovered, and for each surviving
/// internal target its index in the remainder plus the 1-based position of
/// its edge among the removed source's out-edges.
struct DecompositionStep {
  int s = 0;
  std::vector<std::pair<int, int>> internal_edges;  // (vertex, position)
};

/// Relabels an ordered graph presentation into decomposition-canonical form.
/// `out` lists ordered targets per vertex; the source order is increasing
/// vertex index.  Throws MalformedInputError on cycles or bad targets.
Doag canonicalize(int n, const std::vector<std::vector<int>>& out);

/// Labelled transition matrix of a canonical Doag.
TransitionMatrix encode(const Doag& d);

/// Inverse of encode; requires is_valid_transition_matrix.
Doag decode(const TransitionMatrix& m);

/// Checks the matrix invariants (strictly upper triangular, row suffixes are
/// variations) plus the staircase conditions on the per-column lowest
/// positive entries.  Never throws; invariant violations return false.
bool is_valid_transition_matrix(const TransitionMatrix& m);

/// Removes the smallest source; returns the canonical remainder and the
/// reconstruction data.  Requires at least two vertices.
std::pair<Doag, DecompositionStep> decompose_step(const Doag& d);

/// Exact inverse of decompose_step.
Doag recompose(const Doag& d, const DecompositionStep& step);

DoagStats doag_stats(const Doag& d);

// Text formats.  Matrix: first line n, then n whitespace-separated rows.
// Edge list: first line n, then `src dst rank` lines (1-based vertices,
// rank = position in out-edge order).  DOT: edges in out-edge order with
// rank labels and a `// sources: 1..k` comment.
std::string matrix_to_text(const TransitionMatrix& m);
TransitionMatrix matrix_from_text(std::istream& in);
std::string doag_to_edgelist(const Doag& d);
Doag doag_from_edgelist(std::istream& in);
std::string doag_to_dot(const Doag& d);

}  // namespace randdag

#endif
