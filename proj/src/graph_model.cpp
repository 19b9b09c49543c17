#include "randdag/graph_model.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <sstream>

#include "randdag/errors.hpp"
#include "randdag/variations.hpp"

namespace randdag {

namespace {

void check_targets(int n, const std::vector<std::vector<int>>& out) {
  if ((int)out.size() != n)
    throw MalformedInputError("doag: out-edge list size does not match n");
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : out[v]) {
      if (w < 0 || w >= n)
        throw MalformedInputError("doag: edge target out of range");
      if (seen[w]) throw MalformedInputError("doag: duplicate out-edge");
      seen[w] = 1;
    }
    for (int w : out[v]) seen[w] = 0;
  }
}

std::vector<int> in_degrees(int n, const std::vector<std::vector<int>>& out) {
  std::vector<int> indeg(n, 0);
  for (const auto& targets : out)
    for (int w : targets) ++indeg[w];
  return indeg;
}

int source_count(const Doag& d) {
  std::vector<int> indeg = in_degrees(d.n, d.out);
  int k = 0;
  for (int v = 0; v < d.n; ++v)
    if (indeg[v] == 0) ++k;
  return k;
}

}  // namespace

Doag canonicalize(int n, const std::vector<std::vector<int>>& out) {
  if (n < 1) throw MalformedInputError("doag: need at least one vertex");
  check_targets(n, out);
  std::vector<int> indeg = in_degrees(n, out);

  // BFS topological order: consume the smallest source, append uncovered
  // sources behind the existing ones in out-edge order.
  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : out[v]) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if ((int)order.size() != n)
    throw MalformedInputError("doag: graph contains a cycle");

  std::vector<int> new_index(n);
  for (int i = 0; i < n; ++i) new_index[order[i]] = i;
  Doag d;
  d.n = n;
  d.out.resize(n);
  for (int i = 0; i < n; ++i) {
    d.out[i].reserve(out[order[i]].size());
    for (int w : out[order[i]]) d.out[i].push_back(new_index[w]);
  }
  return d;
}

TransitionMatrix encode(const Doag& d) {
  if (d.n < 1) throw MalformedInputError("encode: need at least one vertex");
  check_targets(d.n, d.out);
  TransitionMatrix m(d.n);
  for (int i = 0; i < d.n; ++i) {
    for (size_t r = 0; r < d.out[i].size(); ++r) {
      int j = d.out[i][r];
      if (j <= i)
        throw MalformedInputError(
            "encode: edge does not follow the canonical order");
      m.set(i, j, (int32_t)(r + 1));
    }
  }
  if (!is_valid_transition_matrix(m))
    throw MalformedInputError("encode: graph is not in canonical form");
  return m;
}

bool is_valid_transition_matrix(const TransitionMatrix& m) {
  const int n = m.n();
  if (n < 1) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != 0) return false;
  std::vector<int> row;
  for (int i = 0; i + 1 < n; ++i) {
    row.clear();
    for (int j = i + 1; j < n; ++j) row.push_back(m.at(i, j));
    if (!is_variation(row)) return false;
  }
  // b[j]: lowest row with a positive entry in column j, -1 for sources.
  int prev_b = -1;
  for (int j = 0; j < n; ++j) {
    int b = -1;
    for (int i = j - 1; i >= 0; --i) {
      if (m.at(i, j) > 0) {
        b = i;
        break;
      }
    }
    if (b < prev_b) return false;
    if (b == prev_b && b >= 0 && m.at(b, j - 1) >= m.at(b, j)) return false;
    prev_b = b;
  }
  return true;
}

Doag decode(const TransitionMatrix& m) {
  if (!is_valid_transition_matrix(m))
    throw InvalidMatrixError("decode: not a labelled transition matrix");
  const int n = m.n();
  std::vector<std::vector<int>> out(n);
  std::vector<std::pair<int, int>> row;  // (rank, target)
  for (int i = 0; i < n; ++i) {
    row.clear();
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j) > 0) row.emplace_back(m.at(i, j), j);
    std::sort(row.begin(), row.end());
    for (auto& [r, j] : row) out[i].push_back(j);
  }
  // The matrix labelling is canonical; relabel anyway instead of trusting it.
  Doag d = canonicalize(n, out);
  assert(d.out == out);
  return d;
}

std::pair<Doag, DecompositionStep> decompose_step(const Doag& d) {
  if (d.n < 2)
    throw MalformedInputError("decompose_step: need at least two vertices");
  check_targets(d.n, d.out);
  std::vector<int> indeg = in_degrees(d.n, d.out);
  if (indeg[0] != 0)
    throw MalformedInputError("decompose_step: vertex 0 is not a source");

  DecompositionStep step;
  for (size_t t = 0; t < d.out[0].size(); ++t) {
    int w = d.out[0][t];
    if (indeg[w] == 1) {
      ++step.s;
    } else {
      step.internal_edges.emplace_back(w - 1, (int)(t + 1));
    }
  }
  Doag rest;
  rest.n = d.n - 1;
  rest.out.resize(rest.n);
  for (int v = 1; v < d.n; ++v) {
    rest.out[v - 1].reserve(d.out[v].size());
    for (int w : d.out[v]) rest.out[v - 1].push_back(w - 1);
  }
  return {std::move(rest), std::move(step)};
}

Doag recompose(const Doag& d, const DecompositionStep& step) {
  const int kp = source_count(d);
  const int num_internal = (int)step.internal_edges.size();
  const int p = step.s + num_internal;
  if (step.s < 0 || step.s > kp)
    throw InconsistentStepError("recompose: step uncovers more sources than exist");
  std::vector<int> slot(p, -1);
  for (auto [v, pos] : step.internal_edges) {
    if (v < kp || v >= d.n)
      throw InconsistentStepError("recompose: target is not an internal vertex");
    if (pos < 1 || pos > p || slot[pos - 1] != -1)
      throw InconsistentStepError("recompose: bad edge position");
    slot[pos - 1] = v + 1;
  }
  // Free positions receive the s largest sources of d, in source order.
  int next_source = kp - step.s;
  for (int t = 0; t < p; ++t) {
    if (slot[t] == -1) slot[t] = ++next_source;  // +1 shift included
  }
  if (next_source != kp)
    throw InconsistentStepError("recompose: position/source count mismatch");

  Doag out;
  out.n = d.n + 1;
  out.out.resize(out.n);
  out.out[0] = std::move(slot);
  for (int v = 0; v < d.n; ++v) {
    out.out[v + 1].reserve(d.out[v].size());
    for (int w : d.out[v]) out.out[v + 1].push_back(w + 1);
  }
  return out;
}

DoagStats doag_stats(const Doag& d) {
  DoagStats s;
  s.vertices = d.n;
  std::vector<int> indeg = in_degrees(d.n, d.out);
  for (int v = 0; v < d.n; ++v) {
    s.edges += (int)d.out[v].size();
    if (indeg[v] == 0) ++s.sources;
    if (d.out[v].empty()) ++s.sinks;
    s.max_out_degree = std::max(s.max_out_degree, (int)d.out[v].size());
  }
  return s;
}

std::string matrix_to_text(const TransitionMatrix& m) {
  std::ostringstream os;
  os << m.n() << '\n';
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

TransitionMatrix matrix_from_text(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw MalformedInputError("matrix text: bad dimension line");
  TransitionMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int32_t v;
      if (!(in >> v)) throw MalformedInputError("matrix text: truncated");
      m.set(i, j, v);
    }
  return m;
}

std::string doag_to_edgelist(const Doag& d) {
  std::ostringstream os;
  os << d.n << '\n';
  for (int i = 0; i < d.n; ++i)
    for (size_t r = 0; r < d.out[i].size(); ++r)
      os << i + 1 << ' ' << d.out[i][r] + 1 << ' ' << r + 1 << '\n';
  return os.str();
}

Doag doag_from_edgelist(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw MalformedInputError("edge list: bad vertex-count line");
  std::vector<std::vector<std::pair<int, int>>> ranked(n);
  int src, dst, rank;
  while (in >> src >> dst >> rank) {
    if (src < 1 || src > n || dst < 1 || dst > n || rank < 1)
      throw MalformedInputError("edge list: entry out of range");
    ranked[src - 1].emplace_back(rank, dst - 1);
  }
  Doag d;
  d.n = n;
  d.out.resize(n);
  for (int v = 0; v < n; ++v) {
    std::sort(ranked[v].begin(), ranked[v].end());
    for (size_t r = 0; r < ranked[v].size(); ++r) {
      if (ranked[v][r].first != (int)r + 1)
        throw MalformedInputError("edge list: ranks are not 1..degree");
      d.out[v].push_back(ranked[v][r].second);
    }
  }
  encode(d);  // validates canonical form
  return d;
}

std::string doag_to_dot(const Doag& d) {
  std::ostringstream os;
  os << "digraph {\n";
  os << "  // sources: 1.." << doag_stats(d).sources << '\n';
  for (int v = 0; v < d.n; ++v) os << "  " << v + 1 << ";\n";
  for (int i = 0; i < d.n; ++i)
    for (size_t r = 0; r < d.out[i].size(); ++r)
      os << "  " << i + 1 << " -> " << d.out[i][r] + 1 << " [label=\"" << r + 1
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace randdag
