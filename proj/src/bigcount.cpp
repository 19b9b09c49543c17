#include "randdag/bigcount.hpp"

#include <bit>
#include <cmath>
#include <cstddef>

#include "randdag/errors.hpp"

namespace randdag {

namespace {
using u128 = unsigned __int128;
}

namespace detail {

uint64_t addmul_1(uint64_t* dst, const uint64_t* src, size_t n, uint64_t m) {
  uint64_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    u128 t = (u128)src[i] * m + dst[i] + carry;
    dst[i] = (uint64_t)t;
    carry = (uint64_t)(t >> 64);
  }
  return carry;
}

}  // namespace detail

void BigCount::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

size_t BigCount::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * limbs_.size() - std::countl_zero(limbs_.back());
}

int BigCount::compare(const BigCount& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigCount& BigCount::operator+=(const BigCount& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint64_t carry = 0;
  size_t i = 0;
  for (; i < o.limbs_.size(); ++i) {
    u128 t = (u128)limbs_[i] + o.limbs_[i] + carry;
    limbs_[i] = (uint64_t)t;
    carry = (uint64_t)(t >> 64);
  }
  for (; carry && i < limbs_.size(); ++i) {
    u128 t = (u128)limbs_[i] + carry;
    limbs_[i] = (uint64_t)t;
    carry = (uint64_t)(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigCount& BigCount::operator+=(uint64_t v) {
  uint64_t carry = v;
  for (size_t i = 0; carry && i < limbs_.size(); ++i) {
    u128 t = (u128)limbs_[i] + carry;
    limbs_[i] = (uint64_t)t;
    carry = (uint64_t)(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigCount& BigCount::operator*=(uint64_t v) {
  if (v == 0 || limbs_.empty()) {
    limbs_.clear();
    return *this;
  }
  uint64_t carry = 0;
  for (auto& l : limbs_) {
    u128 t = (u128)l * v + carry;
    l = (uint64_t)t;
    carry = (uint64_t)(t >> 64);
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigCount operator*(const BigCount& a, const BigCount& b) {
  BigCount r;
  r.add_mul(a, b);
  return r;
}

void BigCount::add_mul(const BigCount& a, const BigCount& b) {
  if (a.is_zero() || b.is_zero()) return;
  // Iterate over the shorter operand so the inner addmul_1 runs long.
  const BigCount& lo = a.limbs_.size() <= b.limbs_.size() ? a : b;
  const BigCount& hi = a.limbs_.size() <= b.limbs_.size() ? b : a;
  size_t need = lo.limbs_.size() + hi.limbs_.size();
  if (limbs_.size() < need) limbs_.resize(need, 0);
  for (size_t i = 0; i < lo.limbs_.size(); ++i) {
    uint64_t carry =
        detail::addmul_1(limbs_.data() + i, hi.limbs_.data(),
                         hi.limbs_.size(), lo.limbs_[i]);
    size_t j = i + hi.limbs_.size();
    while (carry) {
      if (j == limbs_.size()) {
        limbs_.push_back(carry);
        break;
      }
      u128 t = (u128)limbs_[j] + carry;
      limbs_[j] = (uint64_t)t;
      carry = (uint64_t)(t >> 64);
      ++j;
    }
  }
  normalize();
}

uint64_t BigCount::div_u64(uint64_t d) {
  if (d == 0) throw InternalError("BigCount: division by zero");
  u128 rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = (uint64_t)(cur / d);
    rem = cur % d;
  }
  normalize();
  return (uint64_t)rem;
}

void BigCount::divexact_u64(uint64_t d) {
  uint64_t r = div_u64(d);
  if (r != 0)
    throw InternalError("BigCount: inexact division by " + std::to_string(d));
}

uint64_t BigCount::to_u64() const {
  if (limbs_.size() > 1)
    throw OutOfRangeError("BigCount: value does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

BigCount BigCount::from_limbs(std::vector<uint64_t> limbs) {
  BigCount r;
  r.limbs_ = std::move(limbs);
  r.normalize();
  return r;
}

BigCount BigCount::from_decimal(std::string_view s) {
  if (s.empty()) throw MalformedInputError("BigCount: empty decimal string");
  BigCount r;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw MalformedInputError("BigCount: bad decimal digit");
    r *= 10;
    r += (uint64_t)(c - '0');
  }
  return r;
}

std::string BigCount::to_decimal() const {
  if (is_zero()) return "0";
  // Peel 19 digits at a time.
  constexpr uint64_t kChunk = 10000000000000000000ull;
  BigCount tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    uint64_t part = tmp.div_u64(kChunk);
    if (tmp.is_zero()) {
      out.insert(0, std::to_string(part));
    } else {
      std::string p = std::to_string(part);
      out.insert(0, std::string(19 - p.size(), '0') + p);
    }
  }
  return out;
}

double BigCount::log2() const {
  if (is_zero()) throw OutOfRangeError("BigCount: log2 of zero");
  size_t bits = bit_length();
  if (bits <= 64) return std::log2((long double)limbs_[0]);
  // Top 64 bits of the value; discarding lower bits keeps the relative
  // error of the mantissa below 2^-63.
  size_t top = limbs_.size() - 1;
  int lead = std::countl_zero(limbs_[top]);
  uint64_t m;
  if (lead == 0) {
    m = limbs_[top];
  } else {
    m = (limbs_[top] << lead) | (limbs_[top - 1] >> (64 - lead));
  }
  return (double)(bits - 64) + (double)std::log2((long double)m);
}

}  // namespace randdag
