#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ineq/family.hpp"
#include "ineq/group.hpp"
#include "ineq/lattice.hpp"
#include "ineq/linear.hpp"

namespace ineq {

// n finite non-empty element sets S_1,...,S_n in a common group context.
// Every set is kept sorted in the context order and deduplicated.
class SumsetInstance {
public:
  SumsetInstance(GroupContext ctx, std::vector<std::vector<Elem>> sets);

  const GroupContext& ctx() const { return ctx_; }
  int n() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<Elem>>& sets() const { return sets_; }

private:
  GroupContext ctx_;
  std::vector<std::vector<Elem>> sets_;
};

// Ordered product/sum S_{i1} * ... * S_{ir} over the indices of A ascending.
// Empty A yields {identity}. Result sorted in context order.
std::vector<Elem> sumset(const SumsetInstance& inst, SubsetMask A);

// Lexicographically least decomposition of s over prod_{i in A} S_i with
// coordinates combining to s. Requires a commutative context. Throws
// Err::not_in_sumset when s has no decomposition.
std::vector<Elem> phi_embed(const SumsetInstance& inst, SubsetMask A, const Elem& s);

// Image of the full sumset under the least-decomposition embedding, encoded
// as index tuples into the ordered sets, so lattice projections apply.
// |image| = |S| and |image_A| <= |S_A| for every non-empty A.
LatticeSet embed_image(const SumsetInstance& inst);

// |S|^k <= prod_{A in fam} |S_A| for a uniform k-cover, checked exactly, plus
// the induced lattice-cover check on the embedded image and the
// multiplicative size-profile feasibility.
struct SumsetCoverReport {
  BigNat lhs;
  BigNat rhs;
  bool holds = false;
  std::vector<std::uint64_t> member_sizes;  // |S_A| per member, canonical order
  std::uint64_t full_size = 0;
  LatticeCoverReport embedded;
  bool embedding_consistent = false;  // |S'| = |S| and projections within sumset sizes
  BoxFeasibilityReport lambda;
};

SumsetCoverReport verify_sumset_cover(const SumsetInstance& inst, const SetFamily& fam, int k,
                                      double tol = 1e-9);

// |A+C|^k <= |C|^{k-1} prod_i |A+B_i| for integer sets with C inside
// B_1+...+B_k. The witness embedding decomposes each x in C+A through C
// first, so its projection onto the B coordinates has at most |C| values;
// the uniform-cover bound is also checked on the embedded image.
struct GymrReport {
  int k = 0;
  BigNat lhs;
  BigNat rhs;
  bool holds = false;
  bool equality = false;
  std::uint64_t ac_size = 0;
  std::uint64_t c_size = 0;
  std::vector<std::uint64_t> ab_sizes;
  LatticeCoverReport embedded;
  std::uint64_t embedded_size = 0;    // |S'| (equals |A+C|)
  std::uint64_t embedded_c_proj = 0;  // |S'_{[k]}| (at most |C|)
};

GymrReport verify_gymr(const std::vector<std::int64_t>& A,
                       const std::vector<std::vector<std::int64_t>>& Bs,
                       const std::vector<std::int64_t>& C);

// |S| >= p or |S| - 1 >= sum_i (|S_i| - 1), p the smallest prime dividing the
// group order. Cyclic and Cayley contexts only.
struct CauchyDavenportReport {
  std::uint64_t sum_size = 0;
  std::uint64_t excess_sum = 0;  // sum (|S_i| - 1)
  std::int64_t p = 0;
  bool holds = false;
  // the same additive bound over the all-(n-1)-subsets cover, which can fail
  // in groups with torsion
  struct AdditiveCover {
    int k = 0;
    std::uint64_t lhs = 0;  // k (|S| - 1)
    std::uint64_t rhs = 0;  // sum over members (|S_A| - 1)
    bool holds = false;
  };
  std::optional<AdditiveCover> pair_cover;
};

CauchyDavenportReport verify_cauchy_davenport(const SumsetInstance& inst);

// Largest/smallest product-set size when every coordinate outside A is frozen
// to a single element; brute force over at most `cap` replacement choices.
struct ExtremeSizes {
  std::uint64_t max_size = 0;
  std::uint64_t min_size = 0;
};

ExtremeSizes extreme_products(const SumsetInstance& inst, SubsetMask A, std::uint64_t cap = 100000);

}  // namespace ineq
