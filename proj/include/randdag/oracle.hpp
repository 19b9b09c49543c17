#ifndef RANDDAG_ORACLE_HPP
#define RANDDAG_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "randdag/graph_model.hpp"
#include "randdag/labelled_dag.hpp"
#include "randdag/variations.hpp"

namespace randdag::oracle {

// Brute-force enumerators used as ground truth at desk scale.  They share no
// predicate code with the fast paths: the variation test, the matrix
// staircase test and the acyclicity test are re-implemented here.

/// All sequences in {0..n}^n that are variations, lexicographic; n <= 8.
std::vector<Variation> enumerate_variations(int n);

/// All labelled transition matrices of size n, by filtering the cartesian
/// product of row variations; deterministic (row-major lexicographic) order;
/// n <= 5.
std::vector<TransitionMatrix> enumerate_doags(int n);

/// All variation matrices of size n (no staircase filter); n <= 5.
std::vector<TransitionMatrix> enumerate_variation_matrices(int n);

/// All acyclic subsets of the n(n-1) ordered pairs; deterministic order;
/// n <= 4.
std::vector<LabelledDag> enumerate_labelled_dags(int n);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Goodness of fit of observed class counts against the uniform null over
/// `expected_classes` classes.  Classes missing from the vector count as
/// zero.  Throws UnderSampledError when the total is below 10 per class.
ChiSquareResult chi_square_uniformity(const std::vector<uint64_t>& observed,
                                      uint64_t expected_classes);
ChiSquareResult chi_square_uniformity(
    const std::map<std::string, uint64_t>& observed, uint64_t expected_classes);

/// Two-sample chi-square test that both count vectors come from the same
/// distribution over the same classes.
ChiSquareResult chi_square_two_sample(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b);

}  // namespace randdag::oracle

#endif
