#pragma once

#include <utility>
#include <vector>

#include "ineq/dist.hpp"
#include "ineq/family.hpp"

namespace ineq {

inline constexpr double default_tol = 1e-9;  // bits

enum class Verdict { holds, violated_within_tolerance, violated };

// One checked inequality lhs <= rhs, both sides in bits. The verdict is
// `holds` iff slack >= -tol; violations within 1000*tol of zero are reported
// as violated_within_tolerance, anything worse as violated.
struct EntropyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = default_tol;

  double slack() const { return rhs - lhs; }
  Verdict verdict() const {
    double s = slack();
    if (s >= -tol) return Verdict::holds;
    if (s >= -1000.0 * tol) return Verdict::violated_within_tolerance;
    return Verdict::violated;
  }
  bool holds() const { return verdict() == Verdict::holds; }
};

const char* verdict_name(Verdict v);

// H(X) = -sum p log2 p, in bits
double entropy_bits(const JointDistribution& d);

// H(X_A)
double subset_entropy(const JointDistribution& d, SubsetMask A);

// H(X_A | X_B) = H(X_{A u B}) - H(X_B)
double conditional_entropy(const JointDistribution& d, SubsetMask A, SubsetMask B);

// H(X_{A u B}) + H(X_{A n B}) <= H(X_A) + H(X_B)
EntropyReport check_submodularity(const JointDistribution& d, SubsetMask A, SubsetMask B,
                                  double tol = default_tol);

// k H(X) <= sum_A H(X_A) over a k-cover
EntropyReport verify_shearer(const JointDistribution& d, const SetFamily& fam, int k,
                             double tol = default_tol);

// For non-empty A with min a and max b: A_* = {1,...,a-1} and
// A^* = {i not in A : 1 <= i <= b-1}.
std::pair<SubsetMask, SubsetMask> star_sets(SubsetMask A);

struct MadimanTetaliReport {
  EntropyReport lower;  // sum_A H(X_A | X_{A^*}) <= k H(X)
  EntropyReport upper;  // k H(X) <= sum_A H(X_A | X_{A_*})
  bool holds() const { return lower.holds() && upper.holds(); }
};

MadimanTetaliReport verify_madiman_tetali(const JointDistribution& d, const SetFamily& fam, int k,
                                          double tol = default_tol);

// Chain-rule split of H(X): h_i = H(X_i | X_{[i-1]}).
struct BoxCertificate {
  std::vector<double> h;
};

BoxCertificate box_certificate(const JointDistribution& d);

// Sweep over every non-empty A: H(X_A | X_{A^*}) <= sum_{i in A} h_i
//                               <= H(X_A | X_{A_*}).
struct BoxCheckReport {
  bool holds = true;
  double min_lower_slack = 0.0;  // over A: sum h_i - H(X_A | X_{A^*})
  double min_upper_slack = 0.0;  // over A: H(X_A | X_{A_*}) - sum h_i
  double sum_error = 0.0;        // |sum h_i - H(X)|
  SubsetMask worst;
  double tol = default_tol;
};

BoxCheckReport verify_box_certificate(const JointDistribution& d, const BoxCertificate& cert,
                                      double tol = default_tol);

// sum_{B in famB} H(X_B) <= sum_{A in famA} H(X_A), valid whenever famA
// compresses to famB. Throws Err::not_comparable otherwise.
EntropyReport verify_gen1(const JointDistribution& d, const SetFamily& famA, const SetFamily& famB,
                          double tol = default_tol);

// Same inequality against the minimal compression; no reachability search.
EntropyReport verify_gen2(const JointDistribution& d, const SetFamily& fam,
                          double tol = default_tol);

}  // namespace ineq
