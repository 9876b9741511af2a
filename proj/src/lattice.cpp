#include "ineq/lattice.hpp"

#include <algorithm>

namespace ineq {

LatticeSet::LatticeSet(int n, std::vector<Point> points) : n_(n), points_(std::move(points)) {
  if (n < 1 || n > SubsetMask::max_ground) fail(Err::invalid_argument, "dimension must be in 1..30");
  for (const auto& p : points_)
    if (static_cast<int>(p.size()) != n) fail(Err::invalid_argument, "point arity mismatch");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LatticeSet project(const LatticeSet& s, SubsetMask A) {
  if (A.empty()) fail(Err::empty_set, "projection onto the empty coordinate set");
  if (!A.subset_of(SubsetMask::full(s.n())))
    fail(Err::invalid_argument, "projection coordinates outside dimension");
  std::vector<int> keep;
  for (int i = 1; i <= s.n(); ++i)
    if (A.contains(i)) keep.push_back(i - 1);
  std::vector<Point> out;
  out.reserve(s.points().size());
  for (const auto& p : s.points()) {
    Point q;
    q.reserve(keep.size());
    for (int c : keep) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return LatticeSet(static_cast<int>(keep.size()), std::move(out));
}

LatticeCoverReport verify_uniform_cover(const LatticeSet& s, const SetFamily& fam, int k) {
  if (fam.n() != s.n()) fail(Err::invalid_argument, "family and lattice set dimension differ");
  if (s.size() == 0) fail(Err::invalid_argument, "empty lattice set");
  if (!is_k_cover(fam, k)) fail(Err::not_a_cover, "family is not a k-cover for k=" + std::to_string(k));
  LatticeCoverReport rep;
  rep.lhs = BigNat::pow(s.size(), static_cast<unsigned>(k));
  rep.rhs = BigNat::one();
  for (const auto& a : fam.members()) {
    std::uint64_t sz = project(s, a).size();
    rep.projection_sizes.push_back(sz);
    rep.rhs = rep.rhs.times(sz);
  }
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

SetFamily trim_cover(const SetFamily& fam, int k) {
  if (!is_k_cover(fam, k)) fail(Err::not_a_cover, "family is not a k-cover for k=" + std::to_string(k));
  std::vector<SubsetMask> work = fam.members();
  CoverProfile counts = cover_profile(fam);
  for (int e = 1; e <= fam.n(); ++e) {
    while (counts[e - 1] > k) {
      int pick = -1;
      for (int t = 0; t < static_cast<int>(work.size()); ++t) {
        if (!work[t].contains(e)) continue;
        if (pick < 0 || work[t].count() >= work[pick].count()) pick = t;
      }
      work[pick].bits &= ~(1u << (e - 1));
      counts[e - 1]--;
    }
  }
  std::vector<SubsetMask> kept;
  for (const auto& m : work)
    if (!m.empty()) kept.push_back(m);
  return SetFamily(fam.n(), std::move(kept));
}

ProjectionCounterexample projection_counterexample() {
  ProjectionCounterexample ce{
      .set = LatticeSet(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}}),
      .original = SetFamily(3, {SubsetMask{0b011}, SubsetMask{0b101}}),
      .compressed = SetFamily(3, {SubsetMask{0b001}, SubsetMask{0b111}}),
  };
  ce.full_size = ce.set.size();
  ce.size_1 = project(ce.set, SubsetMask{0b001}).size();
  ce.size_12 = project(ce.set, SubsetMask{0b011}).size();
  ce.size_13 = project(ce.set, SubsetMask{0b101}).size();
  ce.compressed_product = ce.full_size * ce.size_1;
  ce.original_product = ce.size_12 * ce.size_13;
  return ce;
}

}  // namespace ineq
