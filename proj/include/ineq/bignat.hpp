#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ineq {

// Arbitrary-precision unsigned integer, just enough for exact products of
// projection sizes: multiply by machine words, powers, comparison, decimal
// printing. Limbs are base 2^32, little-endian, no leading zero limb.
class BigNat {
public:
  BigNat() : limbs_{} {}
  explicit BigNat(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }

  static BigNat one() { return BigNat(1); }

  bool is_zero() const { return limbs_.empty(); }

  static BigNat pow(std::uint64_t base, unsigned exp) {
    BigNat r = one();
    for (unsigned i = 0; i < exp; ++i) r = r.times(base);
    return r;
  }

  BigNat times(std::uint64_t m) const {
    BigNat lo = *this;
    lo.mul_u32(static_cast<std::uint32_t>(m));
    std::uint32_t hi_word = static_cast<std::uint32_t>(m >> 32);
    if (!hi_word) return lo;
    BigNat hi = *this;
    hi.mul_u32(hi_word);
    hi.shift_limbs(1);
    return add(lo, hi);
  }

  static BigNat add(const BigNat& a, const BigNat& b) {
    BigNat r;
    std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t s = carry;
      if (i < a.limbs_.size()) s += a.limbs_[i];
      if (i < b.limbs_.size()) s += b.limbs_[i];
      r.limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // -1, 0, +1
  friend int compare(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
  }
  friend bool operator==(const BigNat& a, const BigNat& b) { return compare(a, b) == 0; }
  friend bool operator<(const BigNat& a, const BigNat& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigNat& a, const BigNat& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigNat& a, const BigNat& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigNat& a, const BigNat& b) { return compare(a, b) >= 0; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
      // divide by 10^9, collect remainder
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      std::string chunk = std::to_string(rem);
      if (work.empty()) {
        out.insert(0, chunk);
      } else {
        out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
      }
    }
    return out;
  }

private:
  void mul_u32(std::uint32_t m) {
    if (m == 0 || is_zero()) {
      limbs_.clear();
      return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = std::uint64_t(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  void shift_limbs(std::size_t k) {
    if (is_zero() || k == 0) return;
    limbs_.insert(limbs_.begin(), k, 0);
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace ineq
