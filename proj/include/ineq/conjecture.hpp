#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ineq/linear.hpp"
#include "ineq/sumset.hpp"

namespace ineq {

// The two open feasibility questions over general groups, keyed by the CLI
// names "6.1" (multiplicative, against the maxima N_A) and "6.2" (additive,
// against the minima n_A).
enum class Conjecture { product_box, additive_bound };

const char* conjecture_name(Conjecture c);     // "6.1" / "6.2"
Conjecture conjecture_from_name(const std::string& s);

struct ConjectureReport {
  Conjecture which = Conjecture::product_box;
  bool feasible = false;
  bool reverified = false;  // witness or certificate passed its audit

  // sizes[mask] = N_A (6.1) or n_A (6.2) for every non-empty A
  std::map<std::uint32_t, std::uint64_t> sizes;
  std::uint64_t full_size = 0;

  std::vector<double> lambda;  // 6.1 witness
  std::vector<Rat> sigma;      // 6.2 witness

  // infeasibility certificate: (mask, multiplier); the full mask denotes the
  // equality row, all other rows are the per-subset bounds
  std::vector<std::pair<std::uint32_t, Rat>> certificate_exact;
  std::vector<std::pair<std::uint32_t, double>> certificate_log;
};

ConjectureReport conjecture_feasibility(const SumsetInstance& inst, Conjecture which,
                                        double tol = 1e-9);

}  // namespace ineq
