#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ineq/error.hpp"

namespace ineq {

// A subset of {1,...,n} with n <= 30; element i is bit i-1.
struct SubsetMask {
  std::uint32_t bits = 0;

  static constexpr int max_ground = 30;

  static SubsetMask full(int n) { return SubsetMask{n == 0 ? 0u : (1u << n) - 1u}; }

  // 1-based elements; validates range against n
  static SubsetMask from_elements(const std::vector<int>& elems, int n) {
    if (n < 0 || n > max_ground) fail(Err::invalid_argument, "ground set size out of range");
    SubsetMask m;
    for (int e : elems) {
      if (e < 1 || e > n)
        fail(Err::parse, "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      m.bits |= 1u << (e - 1);
    }
    return m;
  }

  bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }

  // smallest / largest element (1-based); masks must be non-empty
  int min_element() const { return std::countr_zero(bits) + 1; }
  int max_element() const { return 32 - std::countl_zero(bits); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits | b.bits}; }
  friend SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & b.bits}; }
  auto operator<=>(const SubsetMask&) const = default;
};

// Canonical order on masks: cardinality, then numeric value.
inline bool canonical_less(SubsetMask a, SubsetMask b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits < b.bits;
}

}  // namespace ineq
