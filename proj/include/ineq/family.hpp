#pragma once

#include <vector>

#include "ineq/mask.hpp"

namespace ineq {

// Multiset of non-empty subsets of [n]. Members are kept sorted in canonical
// order (cardinality, then numeric mask value), so equal multisets compare
// equal and hash alike.
class SetFamily {
public:
  SetFamily(int n, std::vector<SubsetMask> members);

  int n() const { return n_; }
  const std::vector<SubsetMask>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  // m = total element count over all members, with multiplicity
  int total_elements() const;

  bool operator==(const SetFamily&) const = default;

private:
  int n_;
  std::vector<SubsetMask> members_;
};

// counts[i-1] = number of members containing i
using CoverProfile = std::vector<int>;

CoverProfile cover_profile(const SetFamily& fam);

// every element of [n] in at least / exactly k members
bool is_k_cover(const SetFamily& fam, int k);
bool is_uniform_k_cover(const SetFamily& fam, int k);

// Replace members i and j (0-based positions in canonical order) by their
// intersection and union; an empty intersection is dropped. Throws
// Err::nested_pair when one member contains the other.
SetFamily elementary_compression(const SetFamily& fam, int i, int j);

// sum of squared member sizes; strictly increases under elementary compression
long potential(const SetFamily& fam);

// The unique inclusion-chain with the same cover profile: row j collects the
// elements lying in at least j members.
SetFamily minimal_compression(const SetFamily& fam);

enum class CompressionRelation { equal, strictly_compresses, incomparable };

// Reachability of `to` from `from` by elementary compressions. Desk scale:
// total element count is capped at 10 (Err::instance_too_large beyond).
CompressionRelation compression_relation(const SetFamily& from, const SetFamily& to);

// reflexive closure of the compression order
bool compresses_to(const SetFamily& from, const SetFamily& to);

}  // namespace ineq
