#pragma once

#include <cstdint>
#include <vector>

#include "ineq/family.hpp"
#include "ineq/sumset.hpp"

namespace ineq {

// Constructive witness for k(|S|-1) >= k(|S'|-1) >= sum_A (|S_A|-1) over a
// uniform k-cover in an ordered torsion-free context (Z^d, lexicographic
// order). The sets are first shifted so each minimum is 0; S' restricts the
// sum to tuples whose coordinates outside some member A lie in {0, a_i}.
struct MarkingWitness {
  int k = 0;
  std::vector<std::vector<Elem>> normalized_sets;
  std::vector<Elem> maxima;  // a_i, per coordinate

  // grid[row][col] = member index (canonical order) packed at cell (row,col);
  // each member occupies exactly one row per column it contains
  std::vector<std::vector<int>> grid;

  // marks recorded per cell, in the processing order semantics
  std::vector<std::vector<std::vector<Elem>>> cell_marks;

  std::vector<Elem> restricted;  // S', normalized coordinates
  std::uint64_t full_size = 0;
  std::uint64_t restricted_size = 0;
  std::uint64_t total_marks = 0;
  std::uint64_t cover_sum = 0;  // sum over members (|S_A| - 1)

  // audits
  bool grid_partitions = false;       // cells of the members tile [k] x [n]
  bool marks_distinct = false;        // within each row, no element marked twice
  bool marks_in_restricted = false;   // every mark lies in S' - {0}
  bool marks_complete = false;        // each member accounts for |S_A|-1 marks
  bool chain_holds = false;           // k(|S|-1) >= k(|S'|-1) >= total marks
};

MarkingWitness marking_algorithm(const SumsetInstance& inst, const SetFamily& fam, int k);

}  // namespace ineq
