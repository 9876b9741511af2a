#include "ineq/conjecture.hpp"

#include <cmath>

namespace ineq {

const char* conjecture_name(Conjecture c) {
  return c == Conjecture::product_box ? "6.1" : "6.2";
}

Conjecture conjecture_from_name(const std::string& s) {
  if (s == "6.1") return Conjecture::product_box;
  if (s == "6.2") return Conjecture::additive_bound;
  fail(Err::invalid_argument, "unknown conjecture \"" + s + "\" (expected 6.1 or 6.2)");
}

ConjectureReport conjecture_feasibility(const SumsetInstance& inst, Conjecture which, double tol) {
  const int n = inst.n();
  if (n > 8) fail(Err::instance_too_large, "conjecture checks limited to 8 sets");

  ConjectureReport rep;
  rep.which = which;
  const std::uint32_t full = SubsetMask::full(n).bits;
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    ExtremeSizes ext = extreme_products(inst, SubsetMask{bits});
    rep.sizes[bits] = which == Conjecture::product_box ? ext.max_size : ext.min_size;
  }
  rep.full_size = rep.sizes.at(full);

  if (which == Conjecture::product_box) {
    // sum_{i in A} x_i <= log2 N_A, sum_i x_i = log2 |S|, with x_i = log2 lambda_i
    LinearSystem<double> sys;
    sys.vars = n;
    std::vector<std::uint32_t> row_masks;
    for (std::uint32_t bits = 1; bits <= full; ++bits) {
      std::vector<double> coeffs(n, 0.0);
      for (int i = 0; i < n; ++i)
        if (bits & (1u << i)) coeffs[i] = 1.0;
      double bound = std::log2(static_cast<double>(rep.sizes.at(bits)));
      if (bits == full)
        sys.add_eq(std::move(coeffs), bound);
      else
        sys.add_le(std::move(coeffs), bound);
      row_masks.push_back(bits);
    }
    auto res = feasible(sys, tol);
    rep.feasible = res.feasible;
    if (res.feasible) {
      for (double x : res.witness) rep.lambda.push_back(std::exp2(x));
      // multiplicative audit of the witness
      rep.reverified = true;
      for (std::uint32_t bits = 1; bits <= full; ++bits) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i)
          if (bits & (1u << i)) prod *= rep.lambda[i];
        double target = static_cast<double>(rep.sizes.at(bits));
        double rel = bits == full ? std::fabs(prod - target) / target
                                  : std::max(0.0, (prod - target) / target);
        if (rel > tol * 1000.0) rep.reverified = false;
      }
    } else {
      for (const auto& [row, mult] : res.certificate)
        rep.certificate_log.emplace_back(row_masks[row], mult);
      rep.reverified = check_certificate(sys, res.certificate, tol);
    }
    return rep;
  }

  // 6.2: sum_{i in A} sigma_i >= n_A - 1, sum_i sigma_i = |S| - 1, exact
  LinearSystem<Rat> sys;
  sys.vars = n;
  std::vector<std::uint32_t> row_masks;
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    std::vector<Rat> coeffs(n, Rat(0));
    if (bits == full) {
      for (int i = 0; i < n; ++i) coeffs[i] = Rat(1);
      sys.add_eq(std::move(coeffs), Rat(static_cast<std::int64_t>(rep.full_size) - 1));
    } else {
      for (int i = 0; i < n; ++i)
        if (bits & (1u << i)) coeffs[i] = Rat(-1);
      sys.add_le(std::move(coeffs), Rat(1 - static_cast<std::int64_t>(rep.sizes.at(bits))));
    }
    row_masks.push_back(bits);
  }
  auto res = feasible(sys);
  rep.feasible = res.feasible;
  if (res.feasible) {
    rep.sigma = res.witness;
    rep.reverified = check_witness(sys, res.witness);
  } else {
    for (const auto& [row, mult] : res.certificate)
      rep.certificate_exact.emplace_back(row_masks[row], mult);
    rep.reverified = check_certificate(sys, res.certificate);
  }
  return rep;
}

}  // namespace ineq
