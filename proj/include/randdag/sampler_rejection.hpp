#ifndef RANDDAG_SAMPLER_REJECTION_HPP
#define RANDDAG_SAMPLER_REJECTION_HPP

#include <cstdint>

#include "randdag/graph_model.hpp"
#include "randdag/rng.hpp"

namespace randdag {

struct RejectionStats {
  uint64_t attempts = 0;
  /// Cells revealed during the column-scan phase, all attempts.
  uint64_t scan_cells = 0;
  /// Cells revealed during column scans of attempts that were rejected.
  uint64_t scan_cells_rejected = 0;
  /// All matrix swaps (scan phase plus completion).
  uint64_t swaps = 0;
};

/// Uniform labelled transition matrix of a size-n graph: fill the rows with
/// uniform variations, keep the matrix iff it passes the validity check.
TransitionMatrix sample_doag_naive(RngStream& rng, int n,
                                   RejectionStats* stats = nullptr);

/// Same distribution as sample_doag_naive, by anticipated rejection: cells
/// are revealed lazily (one Fisher-Yates swap each) column by column, bottom
/// to top, and an attempt aborts at the first staircase violation.  Zeros
/// are threshold-coded (a value above n-i-p_i in row i reads as zero), so
/// the matrix is initialised only once; accepted attempts are completed row
/// by row and the coded zeros materialised.
TransitionMatrix sample_doag_fast(RngStream& rng, int n,
                                  RejectionStats* stats = nullptr);

/// Variant with read-before-draw poison checks, used by tests to verify the
/// attempt-reset logic never reads a stale cell.
TransitionMatrix sample_doag_fast_checked(RngStream& rng, int n,
                                          RejectionStats* stats = nullptr);

enum class RejectionMethod { naive, fast, auto_pick };

/// Uniform size-n graph; auto_pick uses the fast sampler for n > 8.
Doag sample_doag_by_vertices(RngStream& rng, int n,
                             RejectionMethod method = RejectionMethod::auto_pick,
                             RejectionStats* stats = nullptr);

}  // namespace randdag

#endif
