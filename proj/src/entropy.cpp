#include "ineq/entropy.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace ineq {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated_within_tolerance: return "violated-within-tolerance";
    case Verdict::violated: return "violated";
  }
  return "?";
}

double entropy_bits(const JointDistribution& d) {
  double h = 0.0;
  for (const auto& [x, p] : d.entries()) {
    if (p.is_zero()) continue;
    double pd = p.to_double();
    h -= pd * std::log2(pd);
  }
  return h;
}

double subset_entropy(const JointDistribution& d, SubsetMask A) {
  if (A.empty()) return 0.0;
  std::vector<int> keep;
  for (int i = 1; i <= d.n(); ++i)
    if (A.contains(i)) keep.push_back(i - 1);
  std::map<Tuple, Rat> grouped;
  Tuple proj(keep.size());
  for (const auto& [x, p] : d.entries()) {
    if (p.is_zero()) continue;
    for (std::size_t t = 0; t < keep.size(); ++t) proj[t] = x[keep[t]];
    grouped[proj] += p;
  }
  double h = 0.0;
  for (const auto& [x, p] : grouped) {
    double pd = p.to_double();
    h -= pd * std::log2(pd);
  }
  return h;
}

double conditional_entropy(const JointDistribution& d, SubsetMask A, SubsetMask B) {
  return subset_entropy(d, A | B) - subset_entropy(d, B);
}

namespace {

void check_ground(const JointDistribution& d, const SetFamily& fam) {
  if (fam.n() != d.n()) fail(Err::invalid_argument, "family and distribution arity differ");
}

void check_ground(const JointDistribution& d, SubsetMask A, const char* what) {
  if (!A.subset_of(SubsetMask::full(d.n())))
    fail(Err::invalid_argument, std::string(what) + " outside the variable index range");
}

}  // namespace

EntropyReport check_submodularity(const JointDistribution& d, SubsetMask A, SubsetMask B,
                                  double tol) {
  check_ground(d, A, "A");
  check_ground(d, B, "B");
  EntropyReport r;
  r.tol = tol;
  r.lhs = subset_entropy(d, A | B) + subset_entropy(d, A & B);
  r.rhs = subset_entropy(d, A) + subset_entropy(d, B);
  return r;
}

EntropyReport verify_shearer(const JointDistribution& d, const SetFamily& fam, int k, double tol) {
  check_ground(d, fam);
  if (!is_k_cover(fam, k)) fail(Err::not_a_cover, "family is not a k-cover for k=" + std::to_string(k));
  EntropyReport r;
  r.tol = tol;
  r.lhs = k * entropy_bits(d);
  for (const auto& a : fam.members()) r.rhs += subset_entropy(d, a);
  return r;
}

std::pair<SubsetMask, SubsetMask> star_sets(SubsetMask A) {
  if (A.empty()) fail(Err::empty_set, "star sets of the empty set are undefined");
  int a = A.min_element();
  int b = A.max_element();
  SubsetMask below{a > 1 ? (1u << (a - 1)) - 1u : 0u};
  SubsetMask gaps{((b > 1 ? (1u << (b - 1)) - 1u : 0u)) & ~A.bits};
  return {below, gaps};
}

MadimanTetaliReport verify_madiman_tetali(const JointDistribution& d, const SetFamily& fam, int k,
                                          double tol) {
  check_ground(d, fam);
  if (!is_uniform_k_cover(fam, k))
    fail(Err::not_uniform_cover, "family is not a uniform k-cover for k=" + std::to_string(k));
  MadimanTetaliReport rep;
  rep.lower.tol = rep.upper.tol = tol;
  double kh = k * entropy_bits(d);
  rep.lower.rhs = kh;
  rep.upper.lhs = kh;
  for (const auto& a : fam.members()) {
    auto [lower_star, upper_star] = star_sets(a);
    rep.lower.lhs += conditional_entropy(d, a, upper_star);
    rep.upper.rhs += conditional_entropy(d, a, lower_star);
  }
  return rep;
}

BoxCertificate box_certificate(const JointDistribution& d) {
  BoxCertificate cert;
  SubsetMask prefix;
  for (int i = 1; i <= d.n(); ++i) {
    SubsetMask self{1u << (i - 1)};
    cert.h.push_back(conditional_entropy(d, self, prefix));
    prefix = prefix | self;
  }
  return cert;
}

BoxCheckReport verify_box_certificate(const JointDistribution& d, const BoxCertificate& cert,
                                      double tol) {
  if (static_cast<int>(cert.h.size()) != d.n())
    fail(Err::invalid_argument, "certificate length differs from variable count");
  BoxCheckReport rep;
  rep.tol = tol;
  double sum = 0.0;
  for (double hi : cert.h) sum += hi;
  rep.sum_error = std::abs(sum - entropy_bits(d));
  rep.min_lower_slack = rep.min_upper_slack = std::numeric_limits<double>::infinity();
  double worst_slack = std::numeric_limits<double>::infinity();
  std::uint32_t full = SubsetMask::full(d.n()).bits;
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    SubsetMask A{bits};
    double part = 0.0;
    for (int i : A.elements()) part += cert.h[i - 1];
    auto [lower_star, upper_star] = star_sets(A);
    double lo = part - conditional_entropy(d, A, upper_star);
    double hi = conditional_entropy(d, A, lower_star) - part;
    if (std::min(lo, hi) < worst_slack) {
      worst_slack = std::min(lo, hi);
      rep.worst = A;
    }
    rep.min_lower_slack = std::min(rep.min_lower_slack, lo);
    rep.min_upper_slack = std::min(rep.min_upper_slack, hi);
  }
  rep.holds = rep.min_lower_slack >= -tol && rep.min_upper_slack >= -tol && rep.sum_error <= tol;
  return rep;
}

namespace {

EntropyReport sum_comparison(const JointDistribution& d, const SetFamily& famA,
                             const SetFamily& famB, double tol) {
  EntropyReport r;
  r.tol = tol;
  for (const auto& b : famB.members()) r.lhs += subset_entropy(d, b);
  for (const auto& a : famA.members()) r.rhs += subset_entropy(d, a);
  return r;
}

}  // namespace

EntropyReport verify_gen1(const JointDistribution& d, const SetFamily& famA, const SetFamily& famB,
                          double tol) {
  check_ground(d, famA);
  check_ground(d, famB);
  if (!compresses_to(famA, famB))
    fail(Err::not_comparable, "second family is not a compression of the first");
  return sum_comparison(d, famA, famB, tol);
}

EntropyReport verify_gen2(const JointDistribution& d, const SetFamily& fam, double tol) {
  check_ground(d, fam);
  return sum_comparison(d, fam, minimal_compression(fam), tol);
}

}  // namespace ineq
