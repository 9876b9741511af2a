#pragma once

#include <initializer_list>
#include <vector>

#include "ineq/dist.hpp"
#include "ineq/family.hpp"
#include "ineq/rng.hpp"

namespace test {

using ineq::Rng;
using ineq::SetFamily;
using ineq::SubsetMask;

inline SubsetMask mask(std::initializer_list<int> elems, int n = 30) {
  return SubsetMask::from_elements(std::vector<int>(elems), n);
}

inline SetFamily family(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SubsetMask> members;
  for (const auto& s : sets) members.push_back(SubsetMask::from_elements(std::vector<int>(s), n));
  return SetFamily(n, std::move(members));
}

// the six-member family over [6] whose minimal compression is a four-row chain
inline SetFamily chain_demo_family() {
  return family(6, {{2, 3, 4}, {1, 3, 5}, {1, 2, 6}, {1, 2}, {1, 3}, {2}});
}

inline SubsetMask random_nonempty_mask(Rng& rng, int n) {
  std::uint32_t full = (1u << n) - 1u;
  std::uint32_t bits = 0;
  while (!bits) bits = static_cast<std::uint32_t>(rng.next()) & full;
  return SubsetMask{bits};
}

inline SetFamily random_family(Rng& rng, int n, int max_members) {
  int count = static_cast<int>(rng.range(1, max_members));
  std::vector<SubsetMask> members;
  for (int i = 0; i < count; ++i) members.push_back(random_nonempty_mask(rng, n));
  return SetFamily(n, std::move(members));
}

// random partition of [n] into non-empty blocks (a uniform 1-cover)
inline std::vector<SubsetMask> random_partition(Rng& rng, int n) {
  std::vector<std::uint32_t> blocks(n, 0);
  for (int e = 0; e < n; ++e) blocks[rng.below(n)] |= 1u << e;
  std::vector<SubsetMask> out;
  for (auto b : blocks)
    if (b) out.push_back(SubsetMask{b});
  return out;
}

// Uniform k-cover: union of k random partitions, then a few reverse
// elementary compressions (splits), which preserve the profile and reach
// covers that are not partition unions (e.g. all 2-subsets of [3]).
inline SetFamily random_uniform_cover(Rng& rng, int n, int k) {
  std::vector<SubsetMask> members;
  for (int i = 0; i < k; ++i)
    for (auto m : random_partition(rng, n)) members.push_back(m);

  auto random_proper_part = [&](std::uint32_t bits) {
    // non-empty proper subset of the given bits
    std::uint32_t x = 0;
    do {
      x = 0;
      for (std::uint32_t b = bits; b; b &= b - 1)
        if (rng.chance(1, 2)) x |= b & ~(b - 1);
    } while (x == 0 || x == bits);
    return x;
  };

  int steps = static_cast<int>(rng.below(4));
  for (int s = 0; s < steps; ++s) {
    if (rng.chance(1, 2)) {
      // split one member into two disjoint halves
      std::vector<int> fat;
      for (int i = 0; i < static_cast<int>(members.size()); ++i)
        if (members[i].count() >= 2) fat.push_back(i);
      if (fat.empty()) continue;
      int pick = fat[rng.below(fat.size())];
      std::uint32_t x = random_proper_part(members[pick].bits);
      std::uint32_t y = members[pick].bits & ~x;
      members[pick] = SubsetMask{x};
      members.push_back(SubsetMask{y});
    } else {
      // replace a nested pair (C subset of D) by two incomparable members
      std::vector<std::pair<int, int>> nested;
      for (int i = 0; i < static_cast<int>(members.size()); ++i)
        for (int j = 0; j < static_cast<int>(members.size()); ++j)
          if (i != j && members[i] != members[j] && members[i].subset_of(members[j]) &&
              members[j].count() - members[i].count() >= 2)
            nested.emplace_back(i, j);
      if (nested.empty()) continue;
      auto [ci, di] = nested[rng.below(nested.size())];
      std::uint32_t rest = members[di].bits & ~members[ci].bits;
      std::uint32_t x = random_proper_part(rest);
      std::uint32_t y = rest & ~x;
      std::uint32_t c = members[ci].bits;
      members[ci] = SubsetMask{c | x};
      members[di] = SubsetMask{c | y};
    }
  }
  return SetFamily(n, std::move(members));
}

// uniform k-cover plus a few extra members: a (non-uniform) k-cover
inline SetFamily random_k_cover(Rng& rng, int n, int k, int extra_max = 2) {
  SetFamily base = random_uniform_cover(rng, n, k);
  std::vector<SubsetMask> members = base.members();
  int extra = static_cast<int>(rng.below(extra_max + 1));
  for (int i = 0; i < extra; ++i) members.push_back(random_nonempty_mask(rng, n));
  return SetFamily(n, std::move(members));
}

}  // namespace test
