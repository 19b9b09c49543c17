#include "randdag/sampler_recursive.hpp"

#include <cassert>

#include "randdag/errors.hpp"

namespace randdag {

std::pair<int, int> pick_degree_split(RngStream& rng,
                                      const DoagCountTable& table, int n,
                                      int m, int k, RecSampleStats* stats) {
  const BigCount& total = table.count(n, m, k);
  if (total.is_zero())
    throw EmptyClassError("pick_degree_split: empty class (n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + ")");
  if (n < 2)
    throw MalformedInputError("pick_degree_split: needs n >= 2");

  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  int hi = std::min(n - k, m);
  for (int p : table.policy().members_upto(hi)) {
    int j = n - k - p;
    BigCount coef(1);
    for (int i = 0; i <= p; ++i) {
      if (i > 0) {
        coef *= (uint64_t)(j + i);
        coef *= (uint64_t)(p - i + 1);
        coef.divexact_u64((uint64_t)i);
        if (stats) stats->bigcount_mults += 2;
      }
      int ck = k - 1 + p - i;
      if (ck < 1 || ck > n - 1) continue;
      const BigCount& child = table.count(n - 1, m - p, ck);
      if (child.is_zero()) continue;
      acc.add_mul(child, coef);
      if (stats) ++stats->bigcount_mults;
      if (acc > r) return {p, i};
    }
  }
  throw InternalError(
      "pick_degree_split: weights do not sum to the table entry");
}

std::vector<int> sample_new_source(RngStream& rng, int i, int s,
                                   std::span<int> T, std::span<const int> S) {
  if (i < 0 || s < 0 || i > (int)T.size() || s > (int)S.size())
    throw OutOfRangeError("sample_new_source: subset larger than pool");
  // Partial Fisher-Yates: after depth i, T[0..i) is a uniform ordered
  // i-subset of T.
  for (int t = 0; t < i; ++t) {
    int r = (int)rng.uniform_int(t, (int)T.size() - 1);
    std::swap(T[t], T[r]);
  }
  // Reverse fill keeps the s chosen sources in their source order.
  std::vector<int> v(i + s);
  int ip = i, sp = s;
  while (ip + sp > 0) {
    if (rng.bernoulli_ratio((uint64_t)ip, (uint64_t)(ip + sp))) {
      v[ip + sp - 1] = T[ip - 1];
      --ip;
    } else {
      v[ip + sp - 1] = S[S.size() - s + sp - 1];
      --sp;
    }
  }
  return v;
}

Doag sample_doag(RngStream& rng, const DoagCountTable& table, int n, int m,
                 int k, RecSampleStats* stats) {
  if (n < 1 || k < 1 || k > n || m < n - k || m > max_edges(n, k))
    throw EmptyClassError("sample_doag: no graph has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ", k=" +
                          std::to_string(k) + " (counts are nonzero only for "
                          "1 <= k <= n and n-k <= m <= n(n-1)/2 - k(k-1)/2)");
  if (n > table.max_n() || m > table.max_m())
    throw OutOfRangeError("sample_doag: class outside table bounds");
  if (table.count(n, m, k).is_zero())
    throw EmptyClassError("sample_doag: no graph has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) +
                          " under the table's degree policy");

  // Downward pass: the split at each stage depends only on the stage
  // parameters, not on the substructure.
  struct Split {
    int p, i;
  };
  std::vector<Split> splits;
  splits.reserve(n - 1);
  int cn = n, cm = m, ck = k;
  while (cn > 1) {
    auto [p, i] = pick_degree_split(rng, table, cn, cm, ck, stats);
    splits.push_back({p, i});
    cn -= 1;
    cm -= p;
    ck = ck - 1 + p - i;
  }
  assert(cm == 0 && ck == 1);

  // Upward pass over one vertex array filled right to left.  slots[t..n-1]
  // always holds the current sub-graph: its sources first (in source order),
  // then its internal vertices in storage order.
  std::vector<std::vector<int>> out_by_id(n);
  std::vector<int> slots(n);
  slots[n - 1] = n - 1;
  int kc = 1;  // source count of the current sub-graph
  for (int stage = 2; stage <= n; ++stage) {
    const Split sp = splits[n - stage];
    const int s = sp.p - sp.i;
    int lo = n - stage + 1;  // first slot of the current sub-graph
    std::span<int> T(slots.data() + lo + kc, (size_t)(stage - 1 - kc));
    std::span<const int> S(slots.data() + lo, (size_t)kc);
    int id = n - stage;
    out_by_id[id] = sample_new_source(rng, sp.i, s, T, S);
    slots[lo - 1] = id;
    kc = kc - s + 1;
  }
  assert(kc == k);

  // The slot array orders sources canonically but internals arbitrarily;
  // relabel through the decomposition order.
  std::vector<std::vector<int>> out_by_slot(n);
  std::vector<int> slot_of(n);
  for (int t = 0; t < n; ++t) slot_of[slots[t]] = t;
  for (int t = 0; t < n; ++t) {
    out_by_slot[t].reserve(out_by_id[slots[t]].size());
    for (int id : out_by_id[slots[t]]) out_by_slot[t].push_back(slot_of[id]);
  }
  Doag d = canonicalize(n, out_by_slot);
  assert(is_valid_transition_matrix(encode(d)));
  return d;
}

Doag sample_doag_vertices_edges(RngStream& rng, const DoagCountTable& table,
                                int n, int m, RecSampleStats* stats) {
  BigCount total = table.count_by_edges(n, m);
  if (total.is_zero())
    throw EmptyClassError("sample_doag: no graph has n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  for (int k = 1; k <= n; ++k) {
    acc += table.count(n, m, k);
    if (acc > r) return sample_doag(rng, table, n, m, k, stats);
  }
  throw InternalError("sample_doag: source-count masses inconsistent");
}

Doag sample_doag_vertices(RngStream& rng, const DoagCountTable& table, int n,
                          RecSampleStats* stats) {
  BigCount total = table.count_by_vertices(n);
  if (total.is_zero())
    throw EmptyClassError("sample_doag: empty class");
  BigCount r = rng.uniform_big_below(total);
  BigCount acc;
  for (int m = 0; m <= table.max_m(); ++m) {
    for (int k = 1; k <= n; ++k) {
      acc += table.count(n, m, k);
      if (acc > r) return sample_doag(rng, table, n, m, k, stats);
    }
  }
  throw InternalError("sample_doag: class masses inconsistent");
}

TransitionMatrix sample_labelled_transition(RngStream& rng,
                                            const DoagCountTable& table, int n,
                                            int m, int k) {
  return encode(sample_doag(rng, table, n, m, k));
}

}  // namespace randdag
