#include "ineq/sumset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace ineq {

namespace {

std::vector<Elem> product_fold(const GroupContext& ctx,
                               const std::vector<const std::vector<Elem>*>& factors) {
  std::vector<Elem> acc{ctx.identity()};
  for (const auto* factor : factors) {
    std::set<Elem> next;
    for (const auto& a : acc)
      for (const auto& b : *factor) next.insert(ctx.op(a, b));
    acc.assign(next.begin(), next.end());
  }
  return acc;
}

bool member(const std::vector<Elem>& sorted, const Elem& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

SumsetInstance::SumsetInstance(GroupContext ctx, std::vector<std::vector<Elem>> sets)
    : ctx_(std::move(ctx)), sets_(std::move(sets)) {
  if (sets_.empty() || sets_.size() > SubsetMask::max_ground)
    fail(Err::invalid_argument, "instance needs between 1 and 30 sets");
  for (auto& s : sets_) {
    if (s.empty()) fail(Err::empty_set, "instance sets must be non-empty");
    for (const auto& e : s) ctx_.validate(e);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

std::vector<Elem> sumset(const SumsetInstance& inst, SubsetMask A) {
  if (!A.subset_of(SubsetMask::full(inst.n())))
    fail(Err::invalid_argument, "index set outside instance range");
  std::vector<const std::vector<Elem>*> factors;
  for (int i : A.elements()) factors.push_back(&inst.sets()[i - 1]);
  return product_fold(inst.ctx(), factors);
}

namespace {

// Shared state for least-decomposition embeddings: suffix sumsets
// T_t = S_{i_t} + ... + S_{i_r}.
struct PhiContext {
  const SumsetInstance& inst;
  std::vector<int> idx;                        // 0-based set indices, ascending
  std::vector<std::vector<Elem>> suffix_sums;  // suffix_sums[t] = T_t

  PhiContext(const SumsetInstance& instance, SubsetMask A) : inst(instance) {
    if (!instance.ctx().commutative())
      fail(Err::invalid_argument, "least-decomposition embedding requires a commutative context");
    for (int i : A.elements()) idx.push_back(i - 1);
    if (idx.empty()) fail(Err::empty_set, "embedding over the empty index set");
    suffix_sums.resize(idx.size());
    std::vector<const std::vector<Elem>*> factors;
    for (std::size_t t = idx.size(); t-- > 0;) {
      factors.insert(factors.begin(), &inst.sets()[idx[t]]);
      suffix_sums[t] = product_fold(inst.ctx(), factors);
    }
  }

  // greedy: the least feasible coordinate first
  std::vector<Elem> decompose(const Elem& s) const {
    const auto& ctx = inst.ctx();
    if (!member(suffix_sums[0], s)) fail(Err::not_in_sumset, "element not in the sumset");
    std::vector<Elem> out;
    Elem rest = s;
    for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
      bool found = false;
      for (const auto& x : inst.sets()[idx[t]]) {
        Elem rem = ctx.op(ctx.inverse(x), rest);
        if (member(suffix_sums[t + 1], rem)) {
          out.push_back(x);
          rest = std::move(rem);
          found = true;
          break;
        }
      }
      if (!found) fail(Err::not_in_sumset, "decomposition failed");  // unreachable
    }
    out.push_back(rest);
    return out;
  }
};

int index_of(const std::vector<Elem>& sorted, const Elem& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) fail(Err::not_in_sumset, "coordinate not in its set");
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

std::vector<Elem> phi_embed(const SumsetInstance& inst, SubsetMask A, const Elem& s) {
  return PhiContext(inst, A).decompose(s);
}

LatticeSet embed_image(const SumsetInstance& inst) {
  PhiContext phi(inst, SubsetMask::full(inst.n()));
  std::vector<Point> tuples;
  for (const auto& s : phi.suffix_sums[0]) {
    auto decomp = phi.decompose(s);
    Point t;
    t.reserve(decomp.size());
    for (std::size_t i = 0; i < decomp.size(); ++i)
      t.push_back(index_of(inst.sets()[i], decomp[i]));
    tuples.push_back(std::move(t));
  }
  return LatticeSet(inst.n(), std::move(tuples));
}

SumsetCoverReport verify_sumset_cover(const SumsetInstance& inst, const SetFamily& fam, int k,
                                      double tol) {
  if (fam.n() != inst.n()) fail(Err::invalid_argument, "family and instance arity differ");
  if (!inst.ctx().commutative())
    fail(Err::invalid_argument, "cover verification requires a commutative context");
  if (!is_uniform_k_cover(fam, k))
    fail(Err::not_uniform_cover, "family is not a uniform k-cover for k=" + std::to_string(k));
  if (inst.n() > 8) fail(Err::instance_too_large, "cover verification limited to 8 sets");

  SumsetCoverReport rep;
  rep.full_size = sumset(inst, SubsetMask::full(inst.n())).size();
  rep.lhs = BigNat::pow(rep.full_size, static_cast<unsigned>(k));
  rep.rhs = BigNat::one();

  std::map<std::uint32_t, std::uint64_t> sizes;
  std::uint32_t full = SubsetMask::full(inst.n()).bits;
  for (std::uint32_t bits = 1; bits <= full; ++bits)
    sizes[bits] = sumset(inst, SubsetMask{bits}).size();
  for (const auto& a : fam.members()) {
    std::uint64_t sz = sizes.at(a.bits);
    rep.member_sizes.push_back(sz);
    rep.rhs = rep.rhs.times(sz);
  }
  rep.holds = rep.lhs <= rep.rhs;

  LatticeSet image = embed_image(inst);
  rep.embedded = verify_uniform_cover(image, fam, k);
  rep.embedding_consistent = image.size() == rep.full_size;
  for (int t = 0; t < fam.size(); ++t)
    if (rep.embedded.projection_sizes[t] > rep.member_sizes[t]) rep.embedding_consistent = false;

  rep.lambda = box_feasibility(sizes, inst.n(), tol);
  return rep;
}

GymrReport verify_gymr(const std::vector<std::int64_t>& A,
                       const std::vector<std::vector<std::int64_t>>& Bs,
                       const std::vector<std::int64_t>& C) {
  const int k = static_cast<int>(Bs.size());
  if (k < 1 || k > 6) fail(Err::invalid_argument, "number of B sets must be in 1..6");
  if (A.empty() || C.empty()) fail(Err::empty_set, "A and C must be non-empty");
  for (const auto& b : Bs)
    if (b.empty()) fail(Err::empty_set, "B sets must be non-empty");

  auto sorted_unique = [](std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  auto plus = [](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::set<std::int64_t> out;
    for (auto a : x)
      for (auto b : y) out.insert(a + b);
    return std::vector<std::int64_t>(out.begin(), out.end());
  };

  std::vector<std::int64_t> a_set = sorted_unique(A);
  std::vector<std::int64_t> c_set = sorted_unique(C);
  std::vector<std::vector<std::int64_t>> b_sets;
  for (const auto& b : Bs) b_sets.push_back(sorted_unique(b));

  std::vector<std::int64_t> b_total{0};
  for (const auto& b : b_sets) b_total = plus(b_total, b);
  for (auto c : c_set)
    if (!std::binary_search(b_total.begin(), b_total.end(), c))
      fail(Err::c_not_contained, "C must be contained in B_1 + ... + B_k");

  GymrReport rep;
  rep.k = k;
  std::vector<std::int64_t> ac = plus(a_set, c_set);
  rep.ac_size = ac.size();
  rep.c_size = c_set.size();
  rep.lhs = BigNat::pow(rep.ac_size, static_cast<unsigned>(k));
  rep.rhs = BigNat::pow(rep.c_size, static_cast<unsigned>(k - 1));
  for (const auto& b : b_sets) {
    std::uint64_t sz = plus(a_set, b).size();
    rep.ab_sizes.push_back(sz);
    rep.rhs = rep.rhs.times(sz);
  }
  rep.holds = rep.lhs <= rep.rhs;
  rep.equality = rep.lhs == rep.rhs;

  // Embed C+A into B_1 x ... x B_k x A: pick the least a with x - a in C,
  // then decompose x - a over the B's least-first. Coordinates are stored as
  // indices into the sorted sets.
  GroupContext z = GroupContext::free_abelian(1);
  std::vector<std::vector<Elem>> b_elem_sets;
  for (const auto& b : b_sets) {
    std::vector<Elem> s;
    for (auto v : b) s.push_back({v});
    b_elem_sets.push_back(std::move(s));
  }
  SumsetInstance b_inst(z, b_elem_sets);
  const int n = k + 1;
  std::vector<Point> tuples;
  for (auto x : ac) {
    std::int64_t a_pick = 0;
    bool found = false;
    for (auto a : a_set) {
      if (std::binary_search(c_set.begin(), c_set.end(), x - a)) {
        a_pick = a;
        found = true;
        break;
      }
    }
    if (!found) fail(Err::not_in_sumset, "element of A+C without a C decomposition");
    auto decomp = phi_embed(b_inst, SubsetMask::full(k), Elem{x - a_pick});
    Point t;
    t.reserve(n);
    for (int i = 0; i < k; ++i)
      t.push_back(std::int64_t(
          std::lower_bound(b_sets[i].begin(), b_sets[i].end(), decomp[i][0]) - b_sets[i].begin()));
    t.push_back(std::int64_t(std::lower_bound(a_set.begin(), a_set.end(), a_pick) - a_set.begin()));
    tuples.push_back(std::move(t));
  }
  LatticeSet image(n, std::move(tuples));
  rep.embedded_size = image.size();

  // the (2k-1)-member uniform k-cover: {i,n} for each i, [k] taken k-1 times
  std::vector<SubsetMask> cover;
  for (int i = 1; i <= k; ++i) cover.push_back(SubsetMask{(1u << (i - 1)) | (1u << (n - 1))});
  for (int c = 0; c < k - 1; ++c) cover.push_back(SubsetMask::full(k));
  SetFamily cover_fam(n, std::move(cover));
  rep.embedded = verify_uniform_cover(image, cover_fam, k);
  rep.embedded_c_proj = project(image, SubsetMask::full(k)).size();
  return rep;
}

CauchyDavenportReport verify_cauchy_davenport(const SumsetInstance& inst) {
  if (inst.ctx().kind() == GroupKind::free_abelian)
    fail(Err::invalid_argument, "Cauchy-Davenport check requires a finite group context");
  CauchyDavenportReport rep;
  rep.sum_size = sumset(inst, SubsetMask::full(inst.n())).size();
  for (const auto& s : inst.sets()) rep.excess_sum += s.size() - 1;
  rep.p = inst.ctx().smallest_prime_factor();
  rep.holds = rep.sum_size >= static_cast<std::uint64_t>(rep.p) ||
              rep.sum_size - 1 >= rep.excess_sum;

  if (inst.n() >= 3 && inst.ctx().commutative()) {
    CauchyDavenportReport::AdditiveCover extra;
    extra.k = inst.n() - 1;
    extra.lhs = static_cast<std::uint64_t>(extra.k) * (rep.sum_size - 1);
    std::uint32_t full = SubsetMask::full(inst.n()).bits;
    for (int i = 1; i <= inst.n(); ++i) {
      SubsetMask a{full & ~(1u << (i - 1))};
      extra.rhs += sumset(inst, a).size() - 1;
    }
    extra.holds = extra.lhs >= extra.rhs;
    rep.pair_cover = extra;
  }
  return rep;
}

ExtremeSizes extreme_products(const SumsetInstance& inst, SubsetMask A, std::uint64_t cap) {
  if (!A.subset_of(SubsetMask::full(inst.n())))
    fail(Err::invalid_argument, "index set outside instance range");
  std::vector<int> frozen;
  std::uint64_t combos = 1;
  for (int i = 1; i <= inst.n(); ++i) {
    if (A.contains(i)) continue;
    frozen.push_back(i - 1);
    combos *= inst.sets()[i - 1].size();
    if (combos > cap) fail(Err::instance_too_large, "too many replacement choices");
  }

  ExtremeSizes ext;
  ext.min_size = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> choice(frozen.size(), 0);
  for (std::uint64_t it = 0; it < combos; ++it) {
    std::vector<std::vector<Elem>> singletons(frozen.size());
    std::vector<const std::vector<Elem>*> factors;
    std::size_t f = 0;
    for (int i = 0; i < inst.n(); ++i) {
      if (A.contains(i + 1)) {
        factors.push_back(&inst.sets()[i]);
      } else {
        singletons[f] = {inst.sets()[i][choice[f]]};
        factors.push_back(&singletons[f]);
        ++f;
      }
    }
    std::uint64_t sz = product_fold(inst.ctx(), factors).size();
    ext.max_size = std::max(ext.max_size, sz);
    ext.min_size = std::min(ext.min_size, sz);
    for (std::size_t c = choice.size(); c-- > 0;) {
      if (++choice[c] < inst.sets()[frozen[c]].size()) break;
      choice[c] = 0;
    }
  }
  return ext;
}

}  // namespace ineq
