#ifndef RANDDAG_DEGREE_POLICY_HPP
#define RANDDAG_DEGREE_POLICY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace randdag {

/// Set of allowed vertex out-degrees restricting a counted or sampled class.
///
/// The classes handled are: all non-negative integers, the positive
/// integers, an interval [0, d], and an arbitrary finite set.  The out-degree
/// constraint applies to every vertex consumed by the recursive
/// decomposition; the single vertex left at the end always has out-degree 0,
/// so a policy without 0 yields graphs with exactly one sink.
class DegreePolicy {
 public:
  enum class Kind { all, positive, bounded, finite_set };

  static DegreePolicy all() { return DegreePolicy(Kind::all, 0, {}); }
  static DegreePolicy positive() { return DegreePolicy(Kind::positive, 0, {}); }
  static DegreePolicy bounded(int d);
  static DegreePolicy finite_set(std::vector<int> values);

  Kind kind() const { return kind_; }
  bool contains(int d) const;

  /// Members of the set intersected with [0, hi], strictly increasing.
  std::vector<int> members_upto(int hi) const;

  /// Whether 0 is excluded (forces a unique sink).
  bool positive_only() const { return !contains(0); }

  /// The same policy with 0 removed.
  DegreePolicy intersect_positive() const;

  /// Textual form used in cache headers: all | positive | max:<d> | set:...
  std::string spec_string() const;
  static DegreePolicy parse(std::string_view spec);

  bool operator==(const DegreePolicy& o) const;
  bool operator!=(const DegreePolicy& o) const { return !(*this == o); }

 private:
  DegreePolicy(Kind k, int bound, std::vector<int> set)
      : kind_(k), bound_(bound), set_(std::move(set)) {}
  Kind kind_;
  int bound_;
  std::vector<int> set_;  // sorted, unique (finite_set only)
};

}  // namespace randdag

#endif
