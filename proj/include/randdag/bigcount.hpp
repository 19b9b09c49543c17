#ifndef RANDDAG_BIGCOUNT_HPP
#define RANDDAG_BIGCOUNT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randdag {

namespace detail {
/// dst[0..n) += src[0..n) * m, returning the carry limb.
uint64_t addmul_1(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m);
}  // namespace detail

/// Arbitrary-precision unsigned integer.
///
/// All counting-table entries and sampler weights live in this type; every
/// operation is exact.  The representation is a little-endian vector of
/// 64-bit limbs with no trailing zero limb (zero is the empty vector).
class BigCount {
 public:
  BigCount() = default;
  BigCount(uint64_t v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) limbs_.push_back(v);
  }

  static BigCount from_decimal(std::string_view s);
  static BigCount from_limbs(std::vector<uint64_t> limbs);

  bool is_zero() const { return limbs_.empty(); }
  /// Number of significant bits; 0 for the value 0.
  size_t bit_length() const;
  const std::vector<uint64_t>& limbs() const { return limbs_; }
  /// Heap bytes held by the limb vector (for memory budgeting).
  size_t byte_size() const { return limbs_.capacity() * sizeof(uint64_t); }

  int compare(const BigCount& o) const;
  bool operator==(const BigCount& o) const { return limbs_ == o.limbs_; }
  bool operator!=(const BigCount& o) const { return limbs_ != o.limbs_; }
  bool operator<(const BigCount& o) const { return compare(o) < 0; }
  bool operator<=(const BigCount& o) const { return compare(o) <= 0; }
  bool operator>(const BigCount& o) const { return compare(o) > 0; }
  bool operator>=(const BigCount& o) const { return compare(o) >= 0; }

  BigCount& operator+=(const BigCount& o);
  BigCount& operator+=(uint64_t v);
  friend BigCount operator+(BigCount a, const BigCount& b) {
    a += b;
    return a;
  }

  BigCount& operator*=(uint64_t v);
  friend BigCount operator*(const BigCount& a, const BigCount& b);
  friend BigCount operator*(BigCount a, uint64_t v) {
    a *= v;
    return a;
  }

  /// *this += a * b, without materialising the product.
  void add_mul(const BigCount& a, const BigCount& b);

  /// In-place division by a small divisor; returns the remainder.
  uint64_t div_u64(uint64_t d);
  /// In-place division that must be exact; throws InternalError otherwise.
  void divexact_u64(uint64_t d);

  /// Value as uint64_t; throws OutOfRangeError if it does not fit.
  uint64_t to_u64() const;
  std::string to_decimal() const;

  /// log2 of the value with ~1e-15 relative error on the log; requires > 0.
  double log2() const;

 private:
  void normalize();
  std::vector<uint64_t> limbs_;
};

}  // namespace randdag

#endif
