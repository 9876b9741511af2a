#include "ineq/group.hpp"

#include <algorithm>

namespace ineq {

GroupContext GroupContext::free_abelian(int d) {
  if (d < 1 || d > 8) fail(Err::invalid_argument, "free-abelian rank must be in 1..8");
  GroupContext g;
  g.kind_ = GroupKind::free_abelian;
  g.dim_ = d;
  g.commutative_ = true;
  g.name_ = "Z^" + std::to_string(d);
  return g;
}

GroupContext GroupContext::cyclic(std::int64_t m) {
  if (m < 1) fail(Err::invalid_argument, "cyclic modulus must be positive");
  if (m > (std::int64_t(1) << 30)) fail(Err::instance_too_large, "cyclic modulus over 2^30");
  GroupContext g;
  g.kind_ = GroupKind::cyclic;
  g.dim_ = 1;
  g.modulus_ = m;
  g.commutative_ = true;
  g.name_ = "Z_" + std::to_string(m);
  return g;
}

GroupContext GroupContext::cayley(std::vector<std::vector<int>> table, int identity,
                                  std::string name) {
  GroupContext g;
  g.kind_ = GroupKind::cayley;
  g.dim_ = 1;
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.name_ = name.empty() ? "G" + std::to_string(g.table_.size()) : std::move(name);

  const int n = static_cast<int>(g.table_.size());
  if (n < 1) fail(Err::parse, "empty operation table");
  if (identity < 0 || identity >= n) fail(Err::parse, "identity index out of range");
  for (const auto& row : g.table_) {
    if (static_cast<int>(row.size()) != n) fail(Err::parse, "operation table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(Err::parse, "operation table entry out of range");
  }
  // Latin square
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int b = 0; b < n; ++b) {
      if (row_seen[g.table_[a][b]] || col_seen[g.table_[b][a]])
        fail(Err::parse, "operation table is not a Latin square");
      row_seen[g.table_[a][b]] = col_seen[g.table_[b][a]] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.table_[identity][a] != a || g.table_[a][identity] != a)
      fail(Err::parse, "identity element does not act as identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
          fail(Err::parse, "operation table is not associative");

  g.inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == identity) g.inverses_[a] = b;

  g.commutative_ = true;
  for (int a = 0; a < n && g.commutative_; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] != g.table_[b][a]) {
        g.commutative_ = false;
        break;
      }
  return g;
}

int GroupContext::order() const {
  switch (kind_) {
    case GroupKind::free_abelian: return 0;
    case GroupKind::cyclic: return static_cast<int>(modulus_);
    case GroupKind::cayley: return static_cast<int>(table_.size());
  }
  return 0;
}

Elem GroupContext::identity() const {
  switch (kind_) {
    case GroupKind::free_abelian: return Elem(dim_, 0);
    case GroupKind::cyclic: return {0};
    case GroupKind::cayley: return {identity_};
  }
  return {};
}

Elem GroupContext::op(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case GroupKind::free_abelian: {
      Elem c(dim_);
      for (int i = 0; i < dim_; ++i) c[i] = a[i] + b[i];
      return c;
    }
    case GroupKind::cyclic: {
      std::int64_t v = (a[0] + b[0]) % modulus_;
      return {v < 0 ? v + modulus_ : v};
    }
    case GroupKind::cayley:
      return {table_[a[0]][b[0]]};
  }
  return {};
}

Elem GroupContext::inverse(const Elem& a) const {
  switch (kind_) {
    case GroupKind::free_abelian: {
      Elem c(dim_);
      for (int i = 0; i < dim_; ++i) c[i] = -a[i];
      return c;
    }
    case GroupKind::cyclic:
      return {a[0] == 0 ? 0 : modulus_ - a[0]};
    case GroupKind::cayley:
      return {inverses_[a[0]]};
  }
  return {};
}

bool GroupContext::less(const Elem& a, const Elem& b) const {
  return a < b;  // lexicographic on coordinates; natural/index order for rank 1
}

void GroupContext::validate(const Elem& a) const {
  if (static_cast<int>(a.size()) != dim_) fail(Err::invalid_argument, "element arity mismatch");
  if (kind_ == GroupKind::cyclic && (a[0] < 0 || a[0] >= modulus_))
    fail(Err::invalid_argument, "residue outside 0..m-1");
  if (kind_ == GroupKind::cayley && (a[0] < 0 || a[0] >= static_cast<std::int64_t>(table_.size())))
    fail(Err::invalid_argument, "element index outside the table");
}

std::int64_t GroupContext::smallest_prime_factor() const {
  std::int64_t n = order();
  if (n <= 1) return 1;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace ineq
