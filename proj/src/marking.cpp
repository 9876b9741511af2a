#include "ineq/marking.hpp"

#include <algorithm>
#include <set>

namespace ineq {

namespace {

Elem add(const Elem& a, const Elem& b) {
  Elem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Elem sub(const Elem& a, const Elem& b) {
  Elem c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

// lexicographic: x in (lo, hi]
bool in_interval(const Elem& x, const Elem& lo, const Elem& hi) { return lo < x && x <= hi; }

std::vector<Elem> fold_sets(const std::vector<std::vector<Elem>>& factors, int dim) {
  std::set<Elem> acc{Elem(dim, 0)};
  for (const auto& factor : factors) {
    std::set<Elem> next;
    for (const auto& a : acc)
      for (const auto& b : factor) next.insert(add(a, b));
    acc = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

MarkingWitness marking_algorithm(const SumsetInstance& inst, const SetFamily& fam, int k) {
  if (!inst.ctx().ordered())
    fail(Err::unordered_context, "marking requires an ordered torsion-free context");
  if (fam.n() != inst.n()) fail(Err::invalid_argument, "family and instance arity differ");
  if (!is_uniform_k_cover(fam, k))
    fail(Err::not_uniform_cover, "family is not a uniform k-cover for k=" + std::to_string(k));

  const int n = inst.n();
  const int dim = inst.ctx().dim();
  MarkingWitness wit;
  wit.k = k;

  // shift every set so its lexicographic minimum is 0
  wit.normalized_sets.resize(n);
  wit.maxima.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& s = inst.sets()[i];  // sorted
    for (const auto& e : s) wit.normalized_sets[i].push_back(sub(e, s.front()));
    wit.maxima[i] = wit.normalized_sets[i].back();
  }

  auto prefix_max_sum = [&](int j, SubsetMask skip) {
    // a_{[j] - skip}
    Elem acc(dim, 0);
    for (int t = 1; t <= j; ++t)
      if (!skip.contains(t)) acc = add(acc, wit.maxima[t - 1]);
    return acc;
  };

  // member sumsets S_A over the normalized sets
  std::vector<std::vector<Elem>> member_sums;
  for (const auto& a : fam.members()) {
    std::vector<std::vector<Elem>> factors;
    for (int i : a.elements()) factors.push_back(wit.normalized_sets[i - 1]);
    member_sums.push_back(fold_sets(factors, dim));
  }

  // full sum S and the restricted sum S'
  {
    wit.full_size = fold_sets(wit.normalized_sets, dim).size();
    std::set<Elem> restricted;
    for (int m = 0; m < fam.size(); ++m) {
      SubsetMask a = fam.members()[m];
      std::vector<std::vector<Elem>> factors{member_sums[m]};
      for (int i = 1; i <= n; ++i)
        if (!a.contains(i)) factors.push_back({Elem(dim, 0), wit.maxima[i - 1]});
      for (auto& e : fold_sets(factors, dim)) restricted.insert(std::move(e));
    }
    wit.restricted.assign(restricted.begin(), restricted.end());
    wit.restricted_size = wit.restricted.size();
  }

  // pack the k x n grid: per column, the members containing it take rows in
  // canonical order
  wit.grid.assign(k, std::vector<int>(n, -1));
  for (int j = 1; j <= n; ++j) {
    int row = 0;
    for (int m = 0; m < fam.size(); ++m)
      if (fam.members()[m].contains(j)) wit.grid[row++][j - 1] = m;
  }
  wit.grid_partitions = true;
  std::vector<int> cells_per_member(fam.size(), 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      int m = wit.grid[r][c];
      if (m < 0 || !fam.members()[m].contains(c + 1)) {
        wit.grid_partitions = false;
      } else {
        cells_per_member[m]++;
      }
    }
  for (int m = 0; m < fam.size(); ++m)
    if (cells_per_member[m] != fam.members()[m].count()) wit.grid_partitions = false;

  // process cells row-major; cell (i,j) of member A marks
  // (a_{[j]-A} + S_A) intersected with the slab (a_{[j-1]}, a_{[j]}]
  wit.cell_marks.assign(k, std::vector<std::vector<Elem>>(n));
  std::vector<std::uint64_t> marks_per_member(fam.size(), 0);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) {
      int m = wit.grid[r][c];
      if (m < 0) continue;
      SubsetMask a = fam.members()[m];
      const int j = c + 1;
      Elem shift = prefix_max_sum(j, a);
      Elem lo = prefix_max_sum(j - 1, SubsetMask{});
      Elem hi = prefix_max_sum(j, SubsetMask{});
      for (const auto& s : member_sums[m]) {
        Elem marked = add(shift, s);
        if (in_interval(marked, lo, hi)) wit.cell_marks[r][c].push_back(marked);
      }
      marks_per_member[m] += wit.cell_marks[r][c].size();
      wit.total_marks += wit.cell_marks[r][c].size();
    }
  }

  for (std::size_t m = 0; m < member_sums.size(); ++m)
    wit.cover_sum += member_sums[m].size() - 1;

  // audits
  wit.marks_distinct = true;
  wit.marks_in_restricted = true;
  const Elem zero(dim, 0);
  for (int r = 0; r < k; ++r) {
    std::set<Elem> row_marks;
    std::uint64_t row_count = 0;
    for (int c = 0; c < n; ++c) {
      for (const auto& e : wit.cell_marks[r][c]) {
        row_marks.insert(e);
        ++row_count;
        if (e == zero || !std::binary_search(wit.restricted.begin(), wit.restricted.end(), e))
          wit.marks_in_restricted = false;
      }
    }
    if (row_marks.size() != row_count) wit.marks_distinct = false;
  }
  wit.marks_complete = true;
  for (std::size_t m = 0; m < member_sums.size(); ++m)
    if (marks_per_member[m] != member_sums[m].size() - 1) wit.marks_complete = false;

  std::uint64_t kk = static_cast<std::uint64_t>(k);
  wit.chain_holds = kk * (wit.full_size - 1) >= kk * (wit.restricted_size - 1) &&
                    kk * (wit.restricted_size - 1) >= wit.total_marks;
  return wit;
}

}  // namespace ineq
