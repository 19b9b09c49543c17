#include "randdag/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "randdag/errors.hpp"

namespace randdag::oracle {

namespace {

// Literal reading of the variation definition, independent of the library
// implementation: positive values occur at most once and are downward closed.
bool variation_def(const std::vector<int>& seq) {
  const int n = (int)seq.size();
  std::vector<int> occurrences(n + 1, 0);
  for (int v : seq) {
    if (v < 0 || v > n) return false;
    ++occurrences[v];
  }
  int largest = 0;
  for (int v = 1; v <= n; ++v) {
    if (occurrences[v] > 1) return false;
    if (occurrences[v] == 1) largest = v;
  }
  for (int v = 1; v <= largest; ++v)
    if (occurrences[v] != 1) return false;
  return true;
}

// Independent staircase test: column-lowest positive rows must not decrease,
// and equal neighbours must carry increasing values.
bool staircase_def(const TransitionMatrix& m) {
  const int n = m.n();
  std::vector<int> lowest(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m.at(i, j) > 0) lowest[j] = std::max(lowest[j], i);
  for (int j = 0; j + 1 < n; ++j) {
    if (lowest[j] > lowest[j + 1]) return false;
    if (lowest[j] == lowest[j + 1] && lowest[j] >= 0 &&
        m.at(lowest[j], j) >= m.at(lowest[j], j + 1))
      return false;
  }
  return true;
}

// Independent acyclicity check via repeated removal of in-degree-0 vertices.
bool acyclic_def(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    ++indeg[v];
    adj[u].push_back(v);
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int w : adj[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return removed == n;
}

std::vector<TransitionMatrix> variation_matrices(int n, bool keep_all) {
  if (n < 1) throw SizeLimitError("enumerate_doags: n must be >= 1");
  if (n > 5) throw SizeLimitError("enumerate_doags: hard cap is n = 5");
  std::vector<std::vector<Variation>> rows;
  for (int i = 0; i + 1 < n; ++i) rows.push_back(enumerate_variations(n - 1 - i));
  std::vector<TransitionMatrix> out;
  std::vector<size_t> odo(rows.size(), 0);
  for (;;) {
    TransitionMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) {
      const Variation& v = rows[i][odo[i]];
      for (int j = i + 1; j < n; ++j) m.set(i, j, v[j - i - 1]);
    }
    if (keep_all || staircase_def(m)) out.push_back(std::move(m));
    // Advance the odometer, last row fastest.
    size_t pos = rows.size();
    while (pos > 0) {
      --pos;
      if (++odo[pos] < rows[pos].size()) break;
      odo[pos] = 0;
      if (pos == 0) return out;
    }
    if (rows.empty()) return out;
  }
}

}  // namespace

std::vector<Variation> enumerate_variations(int n) {
  if (n < 0) throw SizeLimitError("enumerate_variations: n must be >= 0");
  if (n > 8) throw SizeLimitError("enumerate_variations: hard cap is n = 8");
  std::vector<Variation> out;
  std::vector<int> seq(n, 0);
  for (;;) {
    if (variation_def(seq)) out.push_back(seq);
    int pos = n;
    while (pos > 0) {
      --pos;
      if (++seq[pos] <= n) break;
      seq[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<TransitionMatrix> enumerate_doags(int n) {
  return variation_matrices(n, false);
}

std::vector<TransitionMatrix> enumerate_variation_matrices(int n) {
  return variation_matrices(n, true);
}

std::vector<LabelledDag> enumerate_labelled_dags(int n) {
  if (n < 1) throw SizeLimitError("enumerate_labelled_dags: n must be >= 1");
  if (n > 4) throw SizeLimitError("enumerate_labelled_dags: hard cap is n = 4");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<LabelledDag> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t b = 0; b < pairs.size(); ++b)
      if (mask & (uint64_t(1) << b)) edges.push_back(pairs[b]);
    if (!acyclic_def(n, edges)) continue;
    LabelledDag d;
    d.n = n;
    d.edges = std::move(edges);
    std::sort(d.edges.begin(), d.edges.end());
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

// Regularized upper incomplete gamma Q(a, x) by series / continued fraction.
double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw MalformedInputError("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1.0) {
    // P(a, x) by series, return 1 - P.
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    double p = sum * std::exp(-x + a * std::log(x) - gln);
    return std::max(0.0, 1.0 - p);
  }
  // Q(a, x) by Lentz's continued fraction.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

}  // namespace

ChiSquareResult chi_square_uniformity(const std::vector<uint64_t>& observed,
                                      uint64_t expected_classes) {
  if (expected_classes < 2)
    throw MalformedInputError("chi_square: need at least two classes");
  if (observed.size() > expected_classes)
    throw MalformedInputError("chi_square: more counts than classes");
  uint64_t total = 0;
  for (uint64_t c : observed) total += c;
  if (total < 10 * expected_classes)
    throw UnderSampledError("chi_square: need at least 10 samples per class");
  const double e = (double)total / (double)expected_classes;
  double stat = 0.0;
  for (uint64_t c : observed) {
    double d = (double)c - e;
    stat += d * d / e;
  }
  stat += e * (double)(expected_classes - observed.size());
  ChiSquareResult r;
  r.statistic = stat;
  r.dof = (int)expected_classes - 1;
  r.p_value = gamma_q(r.dof / 2.0, stat / 2.0);
  return r;
}

ChiSquareResult chi_square_uniformity(
    const std::map<std::string, uint64_t>& observed,
    uint64_t expected_classes) {
  if (observed.size() > expected_classes)
    throw MalformedInputError("chi_square: more observed classes than expected");
  std::vector<uint64_t> counts;
  counts.reserve(observed.size());
  for (const auto& [key, c] : observed) counts.push_back(c);
  return chi_square_uniformity(counts, expected_classes);
}

ChiSquareResult chi_square_two_sample(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) {
  size_t classes = std::max(a.size(), b.size());
  if (classes < 2)
    throw MalformedInputError("chi_square: need at least two classes");
  auto get = [](const std::vector<uint64_t>& v, size_t i) {
    return i < v.size() ? (double)v[i] : 0.0;
  };
  double na = 0, nb = 0;
  for (uint64_t c : a) na += (double)c;
  for (uint64_t c : b) nb += (double)c;
  if (na < 10 * (double)classes || nb < 10 * (double)classes)
    throw UnderSampledError("chi_square: need at least 10 samples per class");
  double stat = 0.0;
  int used = 0;
  for (size_t i = 0; i < classes; ++i) {
    double row = get(a, i) + get(b, i);
    if (row == 0.0) continue;
    ++used;
    double ea = row * na / (na + nb);
    double eb = row * nb / (na + nb);
    double da = get(a, i) - ea;
    double db = get(b, i) - eb;
    stat += da * da / ea + db * db / eb;
  }
  ChiSquareResult r;
  r.statistic = stat;
  r.dof = used - 1;
  r.p_value = r.dof > 0 ? gamma_q(r.dof / 2.0, stat / 2.0) : 1.0;
  return r;
}

}  // namespace randdag::oracle
