#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ineq/mask.hpp"
#include "ineq/rational.hpp"
#include "ineq/rng.hpp"

namespace ineq {

using Tuple = std::vector<std::int64_t>;

// Finite joint pmf over n-tuples with exact rational probabilities. Entries
// are sorted by tuple and must sum to exactly 1; zero-probability entries are
// permitted and ignored by the entropy functionals.
class JointDistribution {
public:
  JointDistribution(std::vector<std::vector<std::int64_t>> supports,
                    std::vector<std::pair<Tuple, Rat>> entries);

  int n() const { return static_cast<int>(supports_.size()); }
  const std::vector<std::vector<std::int64_t>>& supports() const { return supports_; }
  const std::vector<std::pair<Tuple, Rat>>& entries() const { return entries_; }

private:
  std::vector<std::vector<std::int64_t>> supports_;
  std::vector<std::pair<Tuple, Rat>> entries_;
};

// Restriction to the coordinates in A (ascending), probabilities summed
// exactly. A may be empty: the result is the point distribution on the empty
// tuple.
JointDistribution marginal(const JointDistribution& d, SubsetMask A);

// uniform distribution over a finite set of n-tuples
JointDistribution uniform_distribution(const std::vector<Tuple>& points);

// Seeded generator for property sweeps: per-variable supports {0,...,s-1}
// with s <= max_support, probabilities are multinomial counts over a common
// denominator <= max_denominator.
JointDistribution random_distribution(Rng& rng, int n, int max_support, int max_denominator);

}  // namespace ineq
