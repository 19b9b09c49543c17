#ifndef RANDDAG_SAMPLER_RECURSIVE_HPP
#define RANDDAG_SAMPLER_RECURSIVE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "randdag/counting.hpp"
#include "randdag/graph_model.hpp"
#include "randdag/rng.hpp"

namespace randdag {

struct RecSampleStats {
  uint64_t bigcount_mults = 0;
};

/// Draws (p, i) with probability
///   D(n-1, m-p, k-1+p-i) C(n-k-p+i, i) C(p, i) i! / D(n, m, k),
/// scanning (p, i) lexicographically against one uniform big integer, so the
/// scan costs O(p^2) multiplications in the returned p.  Throws
/// InternalError if the weights do not sum to the table entry.
std::pair<int, int> pick_degree_split(RngStream& rng,
                                      const DoagCountTable& table, int n,
                                      int m, int k,
                                      RecSampleStats* stats = nullptr);

/// Out-edge list of a new source with i edges to internal vertices and s
/// edges to the s largest sources.  The i targets are a uniform ordered
/// i-subset of T (partial Fisher-Yates, then a reverse-fill shuffle against
/// the source block); T is permuted in place.
std::vector<int> sample_new_source(RngStream& rng, int i, int s,
                                   std::span<int> T, std::span<const int> S);

/// Exactly uniform graph with n vertices, m edges and k sources under the
/// table's degree policy.  The recursion is flattened: one pass picks the
/// per-stage splits top-down, then one pre-allocated vertex array is filled
/// right to left.
Doag sample_doag(RngStream& rng, const DoagCountTable& table, int n, int m,
                 int k, RecSampleStats* stats = nullptr);

/// Variants that first draw the unconstrained parameters proportionally to
/// the table masses, giving marginal uniformity over the union class.
Doag sample_doag_vertices_edges(RngStream& rng, const DoagCountTable& table,
                                int n, int m, RecSampleStats* stats = nullptr);
Doag sample_doag_vertices(RngStream& rng, const DoagCountTable& table, int n,
                          RecSampleStats* stats = nullptr);

TransitionMatrix sample_labelled_transition(RngStream& rng,
                                            const DoagCountTable& table, int n,
                                            int m, int k);

}  // namespace randdag

#endif
