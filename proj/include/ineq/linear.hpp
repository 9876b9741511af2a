#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

enum class Rel { le, eq };

template <class T>
struct LinearRow {
  std::vector<T> coeffs;
  Rel rel = Rel::le;
  T bound{};
};

template <class T>
struct LinearSystem {
  int vars = 0;
  std::vector<LinearRow<T>> rows;

  void add_le(std::vector<T> coeffs, T bound) {
    rows.push_back({std::move(coeffs), Rel::le, std::move(bound)});
  }
  void add_eq(std::vector<T> coeffs, T bound) {
    rows.push_back({std::move(coeffs), Rel::eq, std::move(bound)});
  }
};

// Outcome of Fourier-Motzkin elimination. Exactly one of witness/certificate
// is meaningful: a feasible system yields a point satisfying every row, an
// infeasible one yields multipliers (non-negative on `le` rows, free on `eq`
// rows) whose row combination has zero coefficients and a negative bound.
template <class T>
struct Feasibility {
  bool feasible = false;
  std::vector<T> witness;
  std::vector<std::pair<int, T>> certificate;
};

// Exact rational feasibility; caps: 8 variables, 300 rows.
Feasibility<Rat> feasible(const LinearSystem<Rat>& sys);

// Double-precision variant for log-space systems; `slack` is the tolerance
// used when classifying eliminated constant rows and final violations.
Feasibility<double> feasible(const LinearSystem<double>& sys, double slack);

bool check_witness(const LinearSystem<Rat>& sys, const std::vector<Rat>& x);
bool check_witness(const LinearSystem<double>& sys, const std::vector<double>& x, double slack);
bool check_certificate(const LinearSystem<Rat>& sys,
                       const std::vector<std::pair<int, Rat>>& cert);
bool check_certificate(const LinearSystem<double>& sys,
                       const std::vector<std::pair<int, double>>& cert, double slack);

// Feasibility of the log-space box system for a monotone size profile
// sizes[A] (A a non-empty bitmask over n coordinates):
//   sum_{i in A} x_i <= log2 sizes[A]  for A proper,
//   sum_i x_i = log2 sizes[full].
// A feasible witness lambda_i = 2^{x_i} is re-verified multiplicatively.
struct BoxFeasibilityReport {
  bool feasible = false;
  std::vector<double> lambda;
  bool reverified = false;
  double max_rel_violation = 0.0;
  std::vector<std::pair<int, double>> certificate;  // rows in mask order when infeasible
};

BoxFeasibilityReport box_feasibility(const std::map<std::uint32_t, std::uint64_t>& sizes, int n,
                                     double rel_tol = 1e-9);

}  // namespace ineq
