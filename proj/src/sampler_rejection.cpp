#include "randdag/sampler_rejection.hpp"

#include <utility>
#include <vector>

#include "randdag/errors.hpp"
#include "randdag/variations.hpp"

namespace randdag {

TransitionMatrix sample_doag_naive(RngStream& rng, int n,
                                   RejectionStats* stats) {
  if (n < 1) throw MalformedInputError("sample_doag_naive: n must be >= 1");
  for (;;) {
    if (stats) ++stats->attempts;
    TransitionMatrix m(n);
    for (int i = 0; i + 1 < n; ++i) {
      Variation row = sample_variation(rng, n - 1 - i);
      for (int j = i + 1; j < n; ++j) m.set(i, j, row[j - i - 1]);
    }
    if (is_valid_transition_matrix(m)) return m;
  }
}

namespace {

template <bool Checked>
TransitionMatrix sample_fast_impl(RngStream& rng, int n,
                                  RejectionStats* stats) {
  if (n < 1) throw MalformedInputError("sample_doag_fast: n must be >= 1");
  TransitionMatrix a(n);
  if (n == 1) {
    if (stats) ++stats->attempts;
    return a;
  }
  // Row r holds a permutation of 1..n-1-r in columns r+1..n-1; values above
  // n-1-r-p[r] are read as zeros.  One initialisation serves all attempts.
  for (int r = 0; r + 1 < n; ++r)
    for (int c = r + 1; c < n; ++c) a.set(r, c, c - r);

  std::vector<int64_t> pois(n - 1, 0);
  std::vector<int> last_drawn(n - 1, 0);  // largest revealed column per row
  std::vector<uint64_t> row_stamp(n - 1, 0);
  std::vector<uint64_t> cell_stamp;
  if constexpr (Checked) cell_stamp.assign((size_t)n * n, 0);
  uint64_t attempt = 0;

  auto reveal = [&](int r, int c) {
    int rr = (int)rng.uniform_int(c, n - 1);
    int32_t tmp = a.at(r, c);
    a.set(r, c, a.at(r, rr));
    a.set(r, rr, tmp);
    last_drawn[r] = c;
    if (stats) {
      ++stats->scan_cells;
      ++stats->swaps;
    }
    if constexpr (Checked) cell_stamp[(size_t)r * n + c] = attempt;
  };
  auto read_cell = [&](int r, int c) {
    if constexpr (Checked) {
      if (cell_stamp[(size_t)r * n + c] != attempt)
        throw InternalError("fast sampler: read of a stale cell");
    }
    return a.at(r, c);
  };

  bool accepted = false;
  while (!accepted) {
    ++attempt;
    if (stats) ++stats->attempts;
    uint64_t cells_before = stats ? stats->scan_cells : 0;
    int c = 1;
    int r = 0;
    pois[0] = bounded_poisson(rng, 1.0, n - 1);
    row_stamp[0] = attempt;
    bool rejected = false;
    while (c < n) {
      reveal(r, c);
      int thr = n - 1 - r - (int)pois[r];
      bool advance;
      if (c - 1 > r && read_cell(r, c - 1) <= thr) {
        // The left neighbour is the lowest positive cell of column c-1, so
        // this cell must be positive and larger, else the staircase breaks.
        int32_t left = read_cell(r, c - 1);
        int32_t cur = read_cell(r, c);
        if (cur > thr || cur <= left) {
          rejected = true;
          break;
        }
        advance = true;
      } else if (read_cell(r, c) <= thr) {
        advance = true;
      } else {
        --r;
        advance = r < 0;  // every cell zero: column c is a source
      }
      if (advance) {
        ++c;
        if (c < n) {
          r = c - 1;
          pois[r] = bounded_poisson(rng, 1.0, n - 1 - r);
          row_stamp[r] = attempt;
        }
      }
    }
    if (rejected) {
      if (stats) stats->scan_cells_rejected += stats->scan_cells - cells_before;
      continue;
    }
    accepted = true;
  }

  // Completion: finish each row's shuffle past its revealed prefix and
  // materialise the threshold-coded zeros.
  for (int r = 0; r + 1 < n; ++r) {
    if constexpr (Checked) {
      if (row_stamp[r] != attempt)
        throw InternalError("fast sampler: row untouched by accepted attempt");
    }
    int thr = n - 1 - r - (int)pois[r];
    for (int c = r + 1; c <= last_drawn[r]; ++c) {
      if (read_cell(r, c) > thr) a.set(r, c, 0);
    }
    for (int c = last_drawn[r] + 1; c < n; ++c) {
      if constexpr (Checked) {
        if (cell_stamp[(size_t)r * n + c] == attempt)
          throw InternalError("fast sampler: completion re-draws a cell");
      }
      int rr = (int)rng.uniform_int(c, n - 1);
      int32_t tmp = a.at(r, c);
      a.set(r, c, a.at(r, rr));
      a.set(r, rr, tmp);
      if (stats) ++stats->swaps;
      if (a.at(r, c) > thr) a.set(r, c, 0);
    }
  }
  return a;
}

}  // namespace

TransitionMatrix sample_doag_fast(RngStream& rng, int n,
                                  RejectionStats* stats) {
  return sample_fast_impl<false>(rng, n, stats);
}

TransitionMatrix sample_doag_fast_checked(RngStream& rng, int n,
                                          RejectionStats* stats) {
  return sample_fast_impl<true>(rng, n, stats);
}

Doag sample_doag_by_vertices(RngStream& rng, int n, RejectionMethod method,
                             RejectionStats* stats) {
  bool fast = method == RejectionMethod::fast ||
              (method == RejectionMethod::auto_pick && n > 8);
  TransitionMatrix m = fast ? sample_doag_fast(rng, n, stats)
                            : sample_doag_naive(rng, n, stats);
  return decode(m);
}

}  // namespace randdag
