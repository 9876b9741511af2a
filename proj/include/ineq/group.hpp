#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ineq/error.hpp"

namespace ineq {

// Group element. Free-abelian Z^d uses d coordinates; cyclic and
// Cayley-table groups use a single residue / element index.
using Elem = std::vector<std::int64_t>;

enum class GroupKind { free_abelian, cyclic, cayley };

// One of: Z^d with the lexicographic order, Z_m, or a finite group given by
// its Cayley table (validated on construction: Latin square, identity,
// associativity).
class GroupContext {
public:
  static GroupContext free_abelian(int d);
  static GroupContext cyclic(std::int64_t m);
  static GroupContext cayley(std::vector<std::vector<int>> table, int identity,
                             std::string name = "");

  GroupKind kind() const { return kind_; }
  int dim() const { return dim_; }
  std::int64_t modulus() const { return modulus_; }
  int order() const;  // 0 for free-abelian (infinite)
  const std::string& name() const { return name_; }

  bool commutative() const { return commutative_; }
  // whether the context carries a translation-invariant total order
  bool ordered() const { return kind_ == GroupKind::free_abelian; }

  Elem identity() const;
  Elem op(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;

  // fixed total order used by the embeddings: lexicographic for Z^d, natural
  // for Z_m, element index for Cayley tables
  bool less(const Elem& a, const Elem& b) const;

  void validate(const Elem& a) const;

  // smallest prime dividing the group order; 1 for the trivial group
  std::int64_t smallest_prime_factor() const;

private:
  GroupContext() = default;

  GroupKind kind_ = GroupKind::free_abelian;
  int dim_ = 0;
  std::int64_t modulus_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  int identity_ = 0;
  bool commutative_ = true;
  std::string name_;
};

}  // namespace ineq
