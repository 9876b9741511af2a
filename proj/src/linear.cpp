#include "ineq/linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineq/error.hpp"

namespace ineq {

namespace {

constexpr int max_vars = 8;
constexpr int max_input_rows = 300;
constexpr std::size_t max_working_rows = 50000;

template <class T>
struct Scalar;

template <>
struct Scalar<Rat> {
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static bool is_neg(const Rat& x) { return x.is_negative(); }
  static Rat abs(const Rat& x) { return x.is_negative() ? -x : x; }
  static Rat half(const Rat& x) { return x / Rat(2); }
};

template <>
struct Scalar<double> {
  static bool is_zero(double x) { return x == 0.0; }
  static bool is_neg(double x) { return x < 0.0; }
  static double abs(double x) { return std::fabs(x); }
  static double half(double x) { return x / 2.0; }
};

// multiplier list over original rows, sorted by row index
template <class T>
using Combo = std::vector<std::pair<int, T>>;

template <class T>
Combo<T> merge_combos(const Combo<T>& a, const T& fa, const Combo<T>& b, const T& fb) {
  Combo<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, a[i].second * fa);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, b[j].second * fb);
      ++j;
    } else {
      T v = a[i].second * fa + b[j].second * fb;
      if (!Scalar<T>::is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
Combo<T> scale_combo(const Combo<T>& a, const T& f) {
  Combo<T> out = a;
  for (auto& [idx, mult] : out) mult = mult * f;
  return out;
}

template <class T>
struct WorkRow {
  std::vector<T> coeffs;
  T bound{};
  Combo<T> combo;
};

// scale so the first non-zero coefficient has absolute value 1
template <class T>
void normalize(WorkRow<T>& row) {
  for (const T& c : row.coeffs) {
    if (Scalar<T>::is_zero(c)) continue;
    T f = T(1) / Scalar<T>::abs(c);
    for (T& x : row.coeffs) x = x * f;
    row.bound = row.bound * f;
    row.combo = scale_combo(row.combo, f);
    return;
  }
}

// drop rows whose coefficient vector duplicates another's with a weaker bound
template <class T>
void prune(std::vector<WorkRow<T>>& rows) {
  std::sort(rows.begin(), rows.end(), [](const WorkRow<T>& a, const WorkRow<T>& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.bound < b.bound;
  });
  std::vector<WorkRow<T>> kept;
  kept.reserve(rows.size());
  for (auto& r : rows)
    if (kept.empty() || kept.back().coeffs != r.coeffs) kept.push_back(std::move(r));
  rows = std::move(kept);
}

template <class T>
Feasibility<T> run_fm(const LinearSystem<T>& sys, const T& slack) {
  if (sys.vars < 0 || sys.vars > max_vars)
    fail(Err::instance_too_large, "linear systems limited to 8 variables");
  if (static_cast<int>(sys.rows.size()) > max_input_rows)
    fail(Err::instance_too_large, "linear systems limited to 300 rows");
  for (const auto& r : sys.rows)
    if (static_cast<int>(r.coeffs.size()) != sys.vars)
      fail(Err::invalid_argument, "row width differs from variable count");

  Feasibility<T> result;
  std::vector<WorkRow<T>> current;
  auto infeasible_from = [&](const WorkRow<T>& row) {
    result.feasible = false;
    result.certificate.assign(row.combo.begin(), row.combo.end());
  };

  // equalities become two opposite inequalities sharing the original index
  for (int r = 0; r < static_cast<int>(sys.rows.size()); ++r) {
    const auto& row = sys.rows[r];
    WorkRow<T> fwd{row.coeffs, row.bound, {{r, T(1)}}};
    normalize(fwd);
    current.push_back(std::move(fwd));
    if (row.rel == Rel::eq) {
      WorkRow<T> rev;
      rev.coeffs.reserve(row.coeffs.size());
      for (const T& c : row.coeffs) rev.coeffs.push_back(T(0) - c);
      rev.bound = T(0) - row.bound;
      rev.combo = {{r, T(0) - T(1)}};
      normalize(rev);
      current.push_back(std::move(rev));
    }
  }

  auto is_constant_violation = [&](const WorkRow<T>& row) {
    for (const T& c : row.coeffs)
      if (!Scalar<T>::is_zero(c)) return false;
    return row.bound < (T(0) - slack);
  };

  std::vector<std::vector<WorkRow<T>>> stages;
  for (int v = 0; v < sys.vars; ++v) {
    for (const auto& row : current)
      if (is_constant_violation(row)) {
        infeasible_from(row);
        return result;
      }
    stages.push_back(current);
    std::vector<WorkRow<T>> pos, neg, next;
    for (auto& row : current) {
      if (Scalar<T>::is_zero(row.coeffs[v]))
        next.push_back(std::move(row));
      else if (Scalar<T>::is_neg(row.coeffs[v]))
        neg.push_back(std::move(row));
      else
        pos.push_back(std::move(row));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        T fp = T(1) / p.coeffs[v];
        T fq = T(1) / (T(0) - q.coeffs[v]);
        WorkRow<T> comb;
        comb.coeffs.resize(sys.vars, T(0));
        for (int u = 0; u < sys.vars; ++u) comb.coeffs[u] = p.coeffs[u] * fp + q.coeffs[u] * fq;
        comb.coeffs[v] = T(0);  // cancels by construction
        comb.bound = p.bound * fp + q.bound * fq;
        comb.combo = merge_combos(p.combo, fp, q.combo, fq);
        normalize(comb);
        next.push_back(std::move(comb));
      }
      if (next.size() > max_working_rows)
        fail(Err::instance_too_large, "elimination exceeded the working row cap");
    }
    prune(next);
    current = std::move(next);
  }
  for (const auto& row : current)
    if (is_constant_violation(row)) {
      infeasible_from(row);
      return result;
    }

  // feasible: back-substitute, preferring interval midpoints
  result.feasible = true;
  result.witness.assign(sys.vars, T(0));
  for (int v = sys.vars - 1; v >= 0; --v) {
    bool has_lo = false, has_hi = false;
    T lo{}, hi{};
    for (const auto& row : stages[v]) {
      if (Scalar<T>::is_zero(row.coeffs[v])) continue;
      T rest = row.bound;
      for (int u = v + 1; u < sys.vars; ++u) rest = rest - row.coeffs[u] * result.witness[u];
      T val = rest / row.coeffs[v];
      if (Scalar<T>::is_neg(row.coeffs[v])) {
        if (!has_lo || val > lo) lo = val;
        has_lo = true;
      } else {
        if (!has_hi || val < hi) hi = val;
        has_hi = true;
      }
    }
    if (has_lo && has_hi)
      result.witness[v] = Scalar<T>::half(lo + hi);
    else if (has_lo)
      result.witness[v] = lo;
    else if (has_hi)
      result.witness[v] = hi;
  }
  return result;
}

template <class T>
bool witness_ok(const LinearSystem<T>& sys, const std::vector<T>& x, const T& slack) {
  if (static_cast<int>(x.size()) != sys.vars) return false;
  for (const auto& row : sys.rows) {
    T acc{};
    for (int u = 0; u < sys.vars; ++u) acc = acc + row.coeffs[u] * x[u];
    if (row.rel == Rel::le) {
      if (acc > row.bound + slack) return false;
    } else {
      if (acc > row.bound + slack || row.bound > acc + slack) return false;
    }
  }
  return true;
}

template <class T>
bool certificate_ok(const LinearSystem<T>& sys, const std::vector<std::pair<int, T>>& cert,
                    const T& slack) {
  if (cert.empty()) return false;
  std::vector<T> acc(sys.vars, T(0));
  T bound{};
  for (const auto& [idx, mult] : cert) {
    if (idx < 0 || idx >= static_cast<int>(sys.rows.size())) return false;
    const auto& row = sys.rows[idx];
    if (row.rel == Rel::le && Scalar<T>::is_neg(mult)) return false;
    for (int u = 0; u < sys.vars; ++u) acc[u] = acc[u] + mult * row.coeffs[u];
    bound = bound + mult * row.bound;
  }
  for (const T& c : acc)
    if (Scalar<T>::abs(c) > slack) return false;
  return bound < (T(0) - slack);
}

}  // namespace

Feasibility<Rat> feasible(const LinearSystem<Rat>& sys) { return run_fm(sys, Rat(0)); }

Feasibility<double> feasible(const LinearSystem<double>& sys, double slack) {
  return run_fm(sys, slack);
}

bool check_witness(const LinearSystem<Rat>& sys, const std::vector<Rat>& x) {
  return witness_ok(sys, x, Rat(0));
}

bool check_witness(const LinearSystem<double>& sys, const std::vector<double>& x, double slack) {
  return witness_ok(sys, x, slack);
}

bool check_certificate(const LinearSystem<Rat>& sys,
                       const std::vector<std::pair<int, Rat>>& cert) {
  return certificate_ok(sys, cert, Rat(0));
}

bool check_certificate(const LinearSystem<double>& sys,
                       const std::vector<std::pair<int, double>>& cert, double slack) {
  return certificate_ok(sys, cert, slack);
}

BoxFeasibilityReport box_feasibility(const std::map<std::uint32_t, std::uint64_t>& sizes, int n,
                                     double rel_tol) {
  if (n < 1 || n > max_vars) fail(Err::instance_too_large, "box systems limited to 8 coordinates");
  std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t a = 1; a <= full; ++a) {
    auto it = sizes.find(a);
    if (it == sizes.end() || it->second == 0)
      fail(Err::invalid_argument, "size profile must cover every non-empty subset");
    // monotonicity against supersets obtained by adding one coordinate
    for (int i = 0; i < n; ++i) {
      std::uint32_t b = a | (1u << i);
      if (b != a && sizes.count(b) && it->second > sizes.at(b))
        fail(Err::invalid_argument, "size profile is not monotone");
    }
  }

  LinearSystem<double> sys;
  sys.vars = n;
  std::vector<std::uint32_t> row_masks;
  for (std::uint32_t a = 1; a <= full; ++a) {
    std::vector<double> coeffs(n, 0.0);
    for (int i = 0; i < n; ++i)
      if (a & (1u << i)) coeffs[i] = 1.0;
    double bound = std::log2(static_cast<double>(sizes.at(a)));
    if (a == full)
      sys.add_eq(std::move(coeffs), bound);
    else
      sys.add_le(std::move(coeffs), bound);
    row_masks.push_back(a);
  }

  BoxFeasibilityReport rep;
  auto res = feasible(sys, rel_tol);
  rep.feasible = res.feasible;
  if (!res.feasible) {
    rep.certificate = res.certificate;
    return rep;
  }
  rep.lambda.reserve(n);
  for (double x : res.witness) rep.lambda.push_back(std::exp2(x));
  // multiplicative re-check of the witness
  rep.reverified = true;
  for (std::uint32_t a = 1; a <= full; ++a) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
      if (a & (1u << i)) prod *= rep.lambda[i];
    double target = static_cast<double>(sizes.at(a));
    double rel = a == full ? std::fabs(prod - target) / target
                           : std::max(0.0, (prod - target) / target);
    rep.max_rel_violation = std::max(rep.max_rel_violation, rel);
    if (rel > rel_tol * 1000.0) rep.reverified = false;
  }
  return rep;
}

}  // namespace ineq
