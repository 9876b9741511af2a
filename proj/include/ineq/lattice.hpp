#pragma once

#include <cstdint>
#include <vector>

#include "ineq/bignat.hpp"
#include "ineq/family.hpp"

namespace ineq {

using Point = std::vector<std::int64_t>;

// Finite set of integer points in Z^n, deduplicated and sorted.
class LatticeSet {
public:
  LatticeSet(int n, std::vector<Point> points);

  int n() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  std::uint64_t size() const { return points_.size(); }

  bool operator==(const LatticeSet&) const = default;

private:
  int n_;
  std::vector<Point> points_;
};

// Restriction of every point to the coordinates in A (ascending), deduplicated.
LatticeSet project(const LatticeSet& s, SubsetMask A);

// |S|^k <= prod_A |S_A| over a k-cover, exact big-integer arithmetic.
struct LatticeCoverReport {
  BigNat lhs;
  BigNat rhs;
  bool holds = false;
  std::vector<std::uint64_t> projection_sizes;  // per member, canonical order
};

LatticeCoverReport verify_uniform_cover(const LatticeSet& s, const SetFamily& fam, int k);

// Shrink a k-cover to a uniform k-cover with members contained in the
// originals; members trimmed to nothing are dropped. Deterministic: elements
// are scanned in increasing order and removed from the currently largest
// members (ties broken towards the later canonical position).
SetFamily trim_cover(const SetFamily& fam, int k);

// Five-point witness that the chain-compression inequality has no projection
// analogue: |S_{123}| * |S_1| > |S_12| * |S_13| even though the compressed
// family {{1},{1,2,3}} is the minimal compression of {{1,2},{1,3}}.
struct ProjectionCounterexample {
  LatticeSet set;
  SetFamily original;            // {{1,2},{1,3}}
  SetFamily compressed;          // its minimal compression {{1},{1,2,3}}
  std::uint64_t full_size = 0;   // |S|
  std::uint64_t size_1 = 0;      // |S_1|
  std::uint64_t size_12 = 0;     // |S_12|
  std::uint64_t size_13 = 0;     // |S_13|
  std::uint64_t compressed_product = 0;  // |S| * |S_1|
  std::uint64_t original_product = 0;    // |S_12| * |S_13|
};

ProjectionCounterexample projection_counterexample();

}  // namespace ineq
