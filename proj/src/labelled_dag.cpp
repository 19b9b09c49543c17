#include "randdag/labelled_dag.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <sstream>

#include "randdag/errors.hpp"

namespace randdag {

namespace {

const BigCount kZero;

// C(a, b) as a BigCount via the exact incremental product.
BigCount binomial(int a, int b) {
  if (b < 0 || b > a) return BigCount(0);
  BigCount r(1);
  for (int t = 1; t <= b; ++t) {
    r *= (uint64_t)(a - b + t);
    r.divexact_u64((uint64_t)t);
  }
  return r;
}

}  // namespace

const BigCount* DagCountTable::lookup(int n, int m, int k) const {
  const Row& row = layers_[n - 1][k - 1];
  int idx = m - row.m_lo;
  if (idx < 0 || idx >= (int)row.v.size()) return &kZero;
  return &row.v[idx];
}

const BigCount& DagCountTable::pointed_count(int n, int m, int k) const {
  if (n < 1 || k < 1 || k > n || m < 0) return kZero;
  if (m < n - k || m > max_edges(n, k)) return kZero;
  if (n > max_n_ || m > max_m_)
    throw OutOfRangeError("dag count: (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) +
                          ") exceeds table bounds");
  return *lookup(n, m, k);
}

BigCount DagCountTable::count(int n, int m, int k) const {
  BigCount a = pointed_count(n, m, k);
  if (!a.is_zero()) a.divexact_u64((uint64_t)k);
  return a;
}

BigCount DagCountTable::count_total(int n) const {
  if (n < 1 || n > max_n_)
    throw OutOfRangeError("dag count: n out of table range");
  if ((int64_t)max_m_ < max_edges(n, 1))
    throw OutOfRangeError("dag count: table max_m too small for the total");
  BigCount total;
  for (int k = 1; k <= n; ++k) {
    const Row& row = layers_[n - 1][k - 1];
    BigCount row_sum;
    for (const BigCount& c : row.v) row_sum += c;
    row_sum.divexact_u64((uint64_t)k);
    total += row_sum;
  }
  return total;
}

BigCount DagCountTable::count_single_source_sink(int n) const {
  if (!policy_.positive_only())
    throw MalformedInputError(
        "dag count: single-source single-sink needs a positive degree policy");
  if (n < 1 || n > max_n_)
    throw OutOfRangeError("dag count: n out of table range");
  if (n > 1 && (int64_t)max_m_ < max_edges(n, 1))
    throw OutOfRangeError("dag count: table max_m too small");
  BigCount total;
  const Row& row = layers_[n - 1][0];
  for (const BigCount& c : row.v) total += c;
  return total;  // k = 1: pointed equals plain
}

DagCountTable DagCountTable::build(int max_n, int max_m, DegreePolicy policy,
                                   BuildOptions options) {
  if (max_n < 1) throw MalformedInputError("dag table: max_n must be >= 1");
  if (max_m < 0) throw MalformedInputError("dag table: max_m must be >= 0");
  DagCountTable t(max_n, max_m, policy);
  t.layers_.resize(max_n);
  uint64_t bytes = 0;

  t.layers_[0].resize(1);
  t.layers_[0][0].m_lo = 0;
  t.layers_[0][0].v = {BigCount(1)};

  std::vector<Row> plain_prev;  // A-layer of n-1, divided out of the pointed
  for (int n = 2; n <= max_n; ++n) {
    const auto& prev = t.layers_[n - 2];
    plain_prev.assign(prev.begin(), prev.end());
    for (int ck = 1; ck <= n - 1; ++ck)
      for (BigCount& c : plain_prev[ck - 1].v)
        if (!c.is_zero()) c.divexact_u64((uint64_t)ck);

    auto& layer = t.layers_[n - 1];
    layer.resize(n);
    for (int k = 1; k <= n; ++k) {
      Row& row = layer[k - 1];
      row.m_lo = n - k;
      int m_hi = (int)std::min<int64_t>(max_m, max_edges(n, k));
      if (m_hi < row.m_lo) continue;
      row.v.assign(m_hi - row.m_lo + 1, BigCount());

      // coef(p, i) = C(n-k-p+i, i) * C(k-1+p-i, p-i), built by the exact
      // ratio steps (j+i)/i and (p-i+1)/(k+p-i).
      std::vector<int> degrees = policy.members_upto(n - k);
      std::vector<std::vector<BigCount>> coef(degrees.size());
      for (size_t pi = 0; pi < degrees.size(); ++pi) {
        int p = degrees[pi];
        int j = n - k - p;
        coef[pi].resize(p + 1);
        BigCount c1(1);
        BigCount c2 = binomial(k - 1 + p, p);
        coef[pi][0] = c1 * c2;
        for (int i = 1; i <= p; ++i) {
          c1 *= (uint64_t)(j + i);
          c1.divexact_u64((uint64_t)i);
          c2 *= (uint64_t)(p - i + 1);
          c2.divexact_u64((uint64_t)(k + p - i));
          coef[pi][i] = c1 * c2;
        }
      }

      for (int m = row.m_lo; m <= m_hi; ++m) {
        BigCount acc;
        for (size_t pi = 0; pi < degrees.size(); ++pi) {
          int p = degrees[pi];
          if (p > m) break;
          for (int i = 0; i <= p; ++i) {
            int ck = k - 1 + p - i;
            if (ck < 1 || ck > n - 1) continue;
            const Row& crow = plain_prev[ck - 1];
            int idx = (m - p) - crow.m_lo;
            if (idx < 0 || idx >= (int)crow.v.size()) continue;
            const BigCount& child = crow.v[idx];
            if (child.is_zero()) continue;
            acc.add_mul(child, coef[pi][i]);
          }
        }
        acc *= (uint64_t)n;
        row.v[m - row.m_lo] = std::move(acc);
        bytes += row.v[m - row.m_lo].byte_size();
      }
    }
    if (options.memory_budget_bytes && bytes > options.memory_budget_bytes)
      throw ResourceLimitError("dag table: memory budget exceeded at n=" +
                               std::to_string(n));
  }
  t.bytes_ = bytes;
  return t;
}

namespace {

// One split of the labelled sampler: (p, i) drawn proportionally to
// A(n-1, m-p, k-1+p-i) C(n-k-p+i, i) C(k-1+p-i, p-i).  The weights sum to
// pointed(n, m, k) / n, which is integral by construction.
std::pair<int, int> pick_dag_split(RngStream& rng, const DagCountTable& table,
                                   int n, int m, int k) {
  BigCount total = table.pointed_count(n, m, k);
  total.divexact_u64((uint64_t)n);
  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  int hi = std::min(n - k, m);
  for (int p : table.policy().members_upto(hi)) {
    int j = n - k - p;
    BigCount c1(1);
    BigCount c2 = binomial(k - 1 + p, p);
    for (int i = 0; i <= p; ++i) {
      if (i > 0) {
        c1 *= (uint64_t)(j + i);
        c1.divexact_u64((uint64_t)i);
        c2 *= (uint64_t)(p - i + 1);
        c2.divexact_u64((uint64_t)(k + p - i));
      }
      int ck = k - 1 + p - i;
      if (ck < 1 || ck > n - 1) continue;
      BigCount child = table.count(n - 1, m - p, ck);
      if (child.is_zero()) continue;
      acc.add_mul(child, c1 * c2);
      if (acc > r) return {p, i};
    }
  }
  throw InternalError("pick_dag_split: weights do not sum to the table entry");
}

}  // namespace

LabelledDag sample_dag(RngStream& rng, const DagCountTable& table, int n,
                       int m, int k) {
  if (n < 1 || k < 1 || k > n || m < n - k || m > max_edges(n, k))
    throw EmptyClassError("sample_dag: no DAG has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ", k=" +
                          std::to_string(k) + " (counts are nonzero only for "
                          "1 <= k <= n and n-k <= m <= n(n-1)/2 - k(k-1)/2)");
  if (n > table.max_n() || m > table.max_m())
    throw OutOfRangeError("sample_dag: class outside table bounds");
  if (table.pointed_count(n, m, k).is_zero())
    throw EmptyClassError("sample_dag: no DAG has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) +
                          " under the table's degree policy");

  struct Split {
    int p, i;
  };
  std::vector<Split> splits;
  splits.reserve(n - 1);
  int cn = n, cm = m, ck = k;
  while (cn > 1) {
    auto [p, i] = pick_dag_split(rng, table, cn, cm, ck);
    splits.push_back({p, i});
    cn -= 1;
    cm -= p;
    ck = ck - 1 + p - i;
  }
  assert(cm == 0 && ck == 1);

  // Upward pass with stable vertex ids; labels are shifted on each insert.
  std::vector<int> label_of(n);
  std::vector<char> is_source(n);
  std::vector<std::pair<int, int>> edges;  // (id, id)
  edges.reserve(m);
  std::vector<int> scratch;
  label_of[0] = 1;
  is_source[0] = 1;
  int created = 1;
  for (int stage = 2; stage <= n; ++stage) {
    const Split sp = splits[n - stage];
    const int s = sp.p - sp.i;

    scratch.clear();
    for (int id = 0; id < created; ++id)
      if (!is_source[id]) scratch.push_back(id);
    for (int t = 0; t < sp.i; ++t) {
      int r = (int)rng.uniform_int(t, (int)scratch.size() - 1);
      std::swap(scratch[t], scratch[r]);
    }
    int new_id = created++;
    for (int t = 0; t < sp.i; ++t) edges.emplace_back(new_id, scratch[t]);

    scratch.clear();
    for (int id = 0; id < created - 1; ++id)
      if (is_source[id]) scratch.push_back(id);
    for (int t = 0; t < s; ++t) {
      int r = (int)rng.uniform_int(t, (int)scratch.size() - 1);
      std::swap(scratch[t], scratch[r]);
    }
    for (int t = 0; t < s; ++t) {
      edges.emplace_back(new_id, scratch[t]);
      is_source[scratch[t]] = 0;
    }

    int label = (int)rng.uniform_int(1, stage);
    for (int id = 0; id < created - 1; ++id)
      if (label_of[id] >= label) ++label_of[id];
    label_of[new_id] = label;
    is_source[new_id] = 1;
  }

  LabelledDag d;
  d.n = n;
  d.edges.reserve(edges.size());
  for (auto [u, v] : edges)
    d.edges.emplace_back(label_of[u] - 1, label_of[v] - 1);
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

LabelledDag sample_dag_vertices_edges(RngStream& rng,
                                      const DagCountTable& table, int n,
                                      int m) {
  BigCount total;
  for (int k = 1; k <= n; ++k) total += table.count(n, m, k);
  if (total.is_zero())
    throw EmptyClassError("sample_dag: no DAG has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  for (int k = 1; k <= n; ++k) {
    acc += table.count(n, m, k);
    if (acc > r) return sample_dag(rng, table, n, m, k);
  }
  throw InternalError("sample_dag: source masses inconsistent");
}

LabelledDag sample_dag_vertices(RngStream& rng, const DagCountTable& table,
                                int n) {
  BigCount total = table.count_total(n);
  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  for (int m = 0; m <= table.max_m(); ++m) {
    for (int k = 1; k <= n; ++k) {
      acc += table.count(n, m, k);
      if (acc > r) return sample_dag(rng, table, n, m, k);
    }
  }
  throw InternalError("sample_dag: class masses inconsistent");
}

std::string dag_to_edgelist(const LabelledDag& d) {
  std::ostringstream os;
  os << d.n << '\n';
  for (auto [u, v] : d.edges) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

LabelledDag dag_from_edgelist(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1)
    throw MalformedInputError("edge list: bad vertex-count line");
  LabelledDag d;
  d.n = n;
  int u, v;
  while (in >> u >> v) {
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw MalformedInputError("edge list: entry out of range");
    d.edges.emplace_back(u - 1, v - 1);
  }
  std::sort(d.edges.begin(), d.edges.end());
  auto dup = std::adjacent_find(d.edges.begin(), d.edges.end());
  if (dup != d.edges.end())
    throw MalformedInputError("edge list: duplicate edge");
  return d;
}

std::string dag_to_dot(const LabelledDag& d) {
  std::ostringstream os;
  os << "digraph {\n";
  for (int v = 0; v < d.n; ++v) os << "  " << v + 1 << ";\n";
  for (auto [u, v] : d.edges)
    os << "  " << u + 1 << " -> " << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::pair<int, int> dag_edges_sources(const LabelledDag& d) {
  std::vector<char> has_in(d.n, 0);
  for (auto [u, v] : d.edges) has_in[v] = 1;
  int sources = 0;
  for (int v = 0; v < d.n; ++v)
    if (!has_in[v]) ++sources;
  return {(int)d.edges.size(), sources};
}

}  // namespace randdag
