#include "randdag/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "randdag/errors.hpp"

namespace randdag {

namespace {

const BigCount kZero;

// Raw limb accumulator: grow-only buffer that takes += a*b without the
// resize/normalize churn of BigCount temporaries in the DP hot loop.
struct RawAcc {
  std::vector<uint64_t> buf;
  size_t used = 0;

  void add_mul(const BigCount& a, const BigCount& b) {
    if (a.is_zero() || b.is_zero()) return;
    const auto& lo = a.limbs().size() <= b.limbs().size() ? a.limbs() : b.limbs();
    const auto& hi = a.limbs().size() <= b.limbs().size() ? b.limbs() : a.limbs();
    size_t need = lo.size() + hi.size() + 1;
    if (buf.size() < need) buf.resize(std::max(need, buf.size() * 2), 0);
    for (size_t i = 0; i < lo.size(); ++i) {
      uint64_t carry =
          detail::addmul_1(buf.data() + i, hi.data(), hi.size(), lo[i]);
      size_t j = i + hi.size();
      while (carry) {
        if (j == buf.size()) buf.push_back(0);
        unsigned __int128 t = (unsigned __int128)buf[j] + carry;
        buf[j] = (uint64_t)t;
        carry = (uint64_t)(t >> 64);
        ++j;
      }
      if (j > used) used = j;
    }
    if (used < lo.size() + hi.size()) used = lo.size() + hi.size();
  }

  BigCount take() {
    while (used > 0 && buf[used - 1] == 0) --used;
    BigCount r = BigCount::from_limbs(
        std::vector<uint64_t>(buf.begin(), buf.begin() + used));
    std::fill(buf.begin(), buf.begin() + used, 0);
    used = 0;
    return r;
  }
};

}  // namespace

int64_t max_edges(int n, int k) {
  return (int64_t)n * (n - 1) / 2 - (int64_t)k * (k - 1) / 2;
}

// ---------------------------------------------------------------------------
// DoagCountTable

const BigCount* DoagCountTable::lookup(int n, int m, int k) const {
  const Row& row = layers_[n - 1][k - 1];
  int idx = m - row.m_lo;
  if (idx < 0 || idx >= (int)row.v.size()) return &kZero;
  return &row.v[idx];
}

const BigCount& DoagCountTable::count(int n, int m, int k) const {
  if (n < 1 || k < 1 || k > n || m < 0) return kZero;
  if (m < n - k || m > max_edges(n, k)) return kZero;
  if (n > max_n_ || m > max_m_)
    throw OutOfRangeError("doag count: (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) +
                          ") exceeds table bounds (max_n=" +
                          std::to_string(max_n_) +
                          ", max_m=" + std::to_string(max_m_) + ")");
  return *lookup(n, m, k);
}

BigCount DoagCountTable::count_by_vertices(int n) const {
  if (n < 1 || n > max_n_)
    throw OutOfRangeError("doag count: n=" + std::to_string(n) +
                          " out of table range");
  if ((int64_t)max_m_ < max_edges(n, 1))
    throw OutOfRangeError("doag count: table max_m too small for D(n)");
  BigCount total;
  for (const Row& row : layers_[n - 1])
    for (const BigCount& c : row.v) total += c;
  return total;
}

BigCount DoagCountTable::count_by_edges(int n, int m) const {
  BigCount total;
  for (int k = 1; k <= n; ++k) total += count(n, m, k);
  return total;
}

BigCount DoagCountTable::count_by_vertices_sources(int n, int k) const {
  if (n < 1 || k < 1 || k > n) return BigCount(0);
  if (n > max_n_)
    throw OutOfRangeError("doag count: n out of table range");
  if ((int64_t)max_m_ < max_edges(n, k))
    throw OutOfRangeError("doag count: table max_m too small for D(n,k)");
  BigCount total;
  const Row& row = layers_[n - 1][k - 1];
  for (const BigCount& c : row.v) total += c;
  return total;
}

DoagCountTable DoagCountTable::build(int max_n, int max_m, DegreePolicy policy,
                                     BuildOptions options) {
  if (max_n < 1)
    throw MalformedInputError("doag table: max_n must be >= 1");
  if (max_m < 0)
    throw MalformedInputError("doag table: max_m must be >= 0");
  DoagCountTable t(max_n, max_m, policy);
  t.layers_.resize(max_n);
  std::atomic<uint64_t> bytes{0};

  // Layer 1 holds the single-vertex graph.
  t.layers_[0].resize(1);
  t.layers_[0][0].m_lo = 0;
  if (max_m >= 0) t.layers_[0][0].v = {BigCount(1)};

  for (int n = 2; n <= max_n; ++n) {
    auto& layer = t.layers_[n - 1];
    layer.resize(n);
    const auto& prev = t.layers_[n - 2];

    auto build_row = [&](int k) {
      Row& row = layer[k - 1];
      row.m_lo = n - k;
      int m_hi = (int)std::min<int64_t>(max_m, max_edges(n, k));
      if (m_hi < row.m_lo) return;
      row.v.assign(m_hi - row.m_lo + 1, BigCount());

      // Per-(n,k) coefficient rows C(j+i,i) C(p,i) i! with j = n-k-p,
      // obtained by the exact incremental ratio (j+i)(p-i+1)/i.
      std::vector<int> degrees = policy.members_upto(n - k);
      std::vector<std::vector<BigCount>> coef(degrees.size());
      for (size_t pi = 0; pi < degrees.size(); ++pi) {
        int p = degrees[pi];
        int j = n - k - p;
        coef[pi].resize(p + 1);
        coef[pi][0] = BigCount(1);
        for (int i = 1; i <= p; ++i) {
          BigCount c = coef[pi][i - 1];
          c *= (uint64_t)(j + i);
          c *= (uint64_t)(p - i + 1);
          c.divexact_u64((uint64_t)i);
          coef[pi][i] = std::move(c);
        }
      }

      // Sweep the m-range once per (p, i): the child row is contiguous in m
      // and each accumulator grows in place.
      std::vector<RawAcc> acc(row.v.size());
      for (size_t pi = 0; pi < degrees.size(); ++pi) {
        int p = degrees[pi];
        for (int i = 0; i <= p; ++i) {
          int ck = k - 1 + p - i;
          if (ck < 1 || ck > n - 1) continue;
          const Row& crow = prev[ck - 1];
          if (crow.v.empty()) continue;
          const BigCount& c = coef[pi][i];
          int m_from = std::max(row.m_lo, p + crow.m_lo);
          int m_to = std::min(m_hi, p + crow.m_lo + (int)crow.v.size() - 1);
          for (int m = m_from; m <= m_to; ++m) {
            const BigCount& child = crow.v[m - p - crow.m_lo];
            if (!child.is_zero()) acc[m - row.m_lo].add_mul(child, c);
          }
        }
      }
      uint64_t row_bytes = 0;
      for (size_t idx = 0; idx < row.v.size(); ++idx) {
        row.v[idx] = acc[idx].take();
        row_bytes += row.v[idx].byte_size();
      }
      bytes.fetch_add(row_bytes, std::memory_order_relaxed);
    };

    int workers = std::max(1, options.threads);
    if (workers == 1 || n < 8) {
      for (int k = 1; k <= n; ++k) build_row(k);
    } else {
      std::atomic<int> next{1};
      std::vector<std::thread> pool;
      for (int w = 0; w < std::min(workers, n); ++w) {
        pool.emplace_back([&] {
          for (;;) {
            int k = next.fetch_add(1);
            if (k > n) return;
            build_row(k);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    if (options.memory_budget_bytes &&
        bytes.load() > options.memory_budget_bytes)
      throw ResourceLimitError("doag table: memory budget exceeded at n=" +
                               std::to_string(n));
  }
  t.bytes_ = bytes.load();
  return t;
}

void DoagCountTable::for_each_entry(
    const std::function<void(int, int, int, const BigCount&)>& fn) const {
  for (int n = 1; n <= max_n_; ++n) {
    int hi = (int)std::min<int64_t>(max_m_, max_edges(n, 1));
    for (int m = 0; m <= hi; ++m) {
      for (int k = 1; k <= n; ++k) {
        const BigCount* c = lookup(n, m, k);
        if (!c->is_zero()) fn(n, m, k, *c);
      }
    }
  }
}

DoagCountTable DoagCountTable::from_entries(
    int max_n, int max_m, DegreePolicy policy,
    const std::vector<std::tuple<int, int, int, BigCount>>& entries) {
  DoagCountTable t(max_n, max_m, std::move(policy));
  t.layers_.resize(max_n);
  for (int n = 1; n <= max_n; ++n) {
    auto& layer = t.layers_[n - 1];
    layer.resize(n);
    for (int k = 1; k <= n; ++k) {
      Row& row = layer[k - 1];
      row.m_lo = n == 1 ? 0 : n - k;
      int m_hi = (int)std::min<int64_t>(max_m, max_edges(n, k));
      if (n == 1) m_hi = std::min(m_hi, 0);
      if (m_hi >= row.m_lo) row.v.assign(m_hi - row.m_lo + 1, BigCount());
    }
  }
  uint64_t bytes = 0;
  for (const auto& [n, m, k, c] : entries) {
    if (n < 1 || n > max_n || k < 1 || k > n || m < 0 || m > max_m ||
        m < n - k || m > max_edges(n, k))
      throw CacheError("cache entry outside table support");
    Row& row = t.layers_[n - 1][k - 1];
    row.v[m - row.m_lo] = c;
    bytes += c.byte_size();
  }
  t.bytes_ = bytes;
  return t;
}

// ---------------------------------------------------------------------------
// GammaTable

void GammaTable::ensure(int a, int b) {
  int need_a = std::max(a, (int)g_.size() - 1);
  int need_b = std::max(b, bmax_);
  if ((int)g_.size() - 1 >= a && bmax_ >= b) return;

  int old_rows = (int)g_.size();
  g_.resize(need_a + 1);
  for (int ai = 0; ai <= need_a; ++ai) {
    auto& row = g_[ai];
    int old_cols = ai < old_rows ? bmax_ + 1 : 0;
    row.resize(need_b + 1);
    for (int bi = old_cols; bi <= need_b; ++bi) {
      if (ai == 0) {
        row[bi] = BigCount(1);
      } else {
        BigCount v = bi > 0 ? row[bi - 1] : BigCount(0);
        v.add_mul(g_[ai - 1][bi], BigCount((uint64_t)ai));
        if (bi == 0) v += 1;
        row[bi] = std::move(v);
      }
      bytes_ += row[bi].byte_size();
    }
  }
  bmax_ = need_b;
}

const BigCount& GammaTable::gamma(int a, int b) {
  if (a < 0 || b < 0) return kZero;
  ensure(a, b);
  return g_[a][b];
}

void GammaTable::for_each_entry(
    const std::function<void(int, int, const BigCount&)>& fn) const {
  for (int a = 0; a < (int)g_.size(); ++a)
    for (int b = 0; b <= bmax_; ++b) fn(a, b, g_[a][b]);
}

GammaTable GammaTable::from_entries(
    int a_max, int b_max,
    const std::vector<std::tuple<int, int, BigCount>>& entries) {
  if (a_max < 0 || b_max < 0)
    throw CacheError("gamma cache: negative bounds");
  GammaTable t;
  t.g_.assign(a_max + 1, std::vector<BigCount>(b_max + 1));
  t.bmax_ = b_max;
  for (const auto& [a, b, c] : entries) {
    if (a < 0 || a > a_max || b < 0 || b > b_max)
      throw CacheError("cache entry outside table support");
    t.g_[a][b] = c;
    t.bytes_ += c.byte_size();
  }
  return t;
}

// ---------------------------------------------------------------------------
// SourceCountTable

SourceCountTable SourceCountTable::build(int max_n, BuildOptions options) {
  if (max_n < 1)
    throw MalformedInputError("source table: max_n must be >= 1");
  SourceCountTable t(max_n);
  t.rows_.resize(max_n);
  t.totals_.resize(max_n);
  t.rows_[0] = {BigCount(1)};
  t.totals_[0] = BigCount(1);

  GammaTable gammas;
  gammas.gamma(max_n - 1, max_n - 1);  // pre-fill so rows can share it

  std::atomic<uint64_t> bytes{0};
  for (int n = 2; n <= max_n; ++n) {
    auto& row = t.rows_[n - 1];
    row.resize(n);
    const auto& prev = t.rows_[n - 2];

    auto build_cell = [&](int k) {
      BigCount acc;
      for (int s = 0; s <= n - k; ++s) {
        int ck = k - 1 + s;
        if (ck < 1 || ck > n - 1) continue;
        acc.add_mul(prev[ck - 1], gammas.gamma(n - k - s, s));
      }
      row[k - 1] = std::move(acc);
      bytes.fetch_add(row[k - 1].byte_size(), std::memory_order_relaxed);
    };

    int workers = std::max(1, options.threads);
    if (workers == 1 || n < 16) {
      for (int k = 1; k <= n; ++k) build_cell(k);
    } else {
      std::atomic<int> next{1};
      std::vector<std::thread> pool;
      for (int w = 0; w < std::min(workers, n); ++w) {
        pool.emplace_back([&] {
          for (;;) {
            int k = next.fetch_add(1);
            if (k > n) return;
            build_cell(k);
          }
        });
      }
      for (auto& th : pool) th.join();
    }

    BigCount total;
    for (const BigCount& c : row) total += c;
    t.totals_[n - 1] = std::move(total);

    if (options.memory_budget_bytes &&
        bytes.load() + gammas.byte_size() > options.memory_budget_bytes)
      throw ResourceLimitError("source table: memory budget exceeded at n=" +
                               std::to_string(n));
  }
  t.bytes_ = bytes.load();
  return t;
}

const BigCount& SourceCountTable::count(int n, int k) const {
  if (n < 1) return kZero;
  if (n > max_n_)
    throw OutOfRangeError("source count: n=" + std::to_string(n) +
                          " out of table range");
  if (k < 1 || k > n) return kZero;
  return rows_[n - 1][k - 1];
}

const BigCount& SourceCountTable::total(int n) const {
  if (n < 1 || n > max_n_)
    throw OutOfRangeError("source count: n out of table range");
  return totals_[n - 1];
}

const BigCount& SourceCountTable::single_source(int n) const {
  return count(n, 1);
}

void SourceCountTable::for_each_entry(
    const std::function<void(int, int, const BigCount&)>& fn) const {
  for (int n = 1; n <= max_n_; ++n)
    for (int k = 1; k <= n; ++k)
      if (!rows_[n - 1][k - 1].is_zero()) fn(n, k, rows_[n - 1][k - 1]);
}

SourceCountTable SourceCountTable::from_entries(
    int max_n, const std::vector<std::tuple<int, int, BigCount>>& entries) {
  SourceCountTable t(max_n);
  t.rows_.resize(max_n);
  for (int n = 1; n <= max_n; ++n) t.rows_[n - 1].resize(n);
  uint64_t bytes = 0;
  for (const auto& [n, k, c] : entries) {
    if (n < 1 || n > max_n || k < 1 || k > n)
      throw CacheError("cache entry outside table support");
    t.rows_[n - 1][k - 1] = c;
    bytes += c.byte_size();
  }
  t.totals_.resize(max_n);
  for (int n = 1; n <= max_n; ++n) {
    BigCount total;
    for (const BigCount& c : t.rows_[n - 1]) total += c;
    t.totals_[n - 1] = std::move(total);
  }
  t.bytes_ = bytes;
  return t;
}

NormalizedConstants normalized_constant_sequence(const SourceCountTable& table,
                                                 int n) {
  if (n < 1 || n > table.max_n())
    throw OutOfRangeError("normalized sequence: n out of table range");
  NormalizedConstants out;
  out.d_norm.reserve(n);
  out.d_star_norm.reserve(n);
  BigCount factorial(1);        // (j-1)! entering iteration j
  BigCount superfactorial(1);   // sf(j-1) entering iteration j
  const double log2e = std::numbers::log2e;
  for (int j = 1; j <= n; ++j) {
    double base =
        0.5 * std::log2((double)j) - superfactorial.log2() - (j - 1) * log2e;
    out.d_norm.push_back(std::exp2(table.total(j).log2() + base));
    out.d_star_norm.push_back(
        std::exp2(table.single_source(j).log2() + base));
    factorial *= (uint64_t)j;
    superfactorial = superfactorial * factorial;
  }
  return out;
}

}  // namespace randdag
