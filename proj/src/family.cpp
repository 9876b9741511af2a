#include "ineq/family.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace ineq {

SetFamily::SetFamily(int n, std::vector<SubsetMask> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > SubsetMask::max_ground)
    fail(Err::invalid_argument, "ground set size must be in 1..30");
  SubsetMask ground = SubsetMask::full(n);
  for (const auto& m : members_) {
    if (m.empty()) fail(Err::empty_set, "family members must be non-empty");
    if (!m.subset_of(ground)) fail(Err::invalid_argument, "member outside ground set");
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
}

int SetFamily::total_elements() const {
  int m = 0;
  for (const auto& a : members_) m += a.count();
  return m;
}

CoverProfile cover_profile(const SetFamily& fam) {
  CoverProfile counts(fam.n(), 0);
  for (const auto& a : fam.members())
    for (int e : a.elements()) counts[e - 1]++;
  return counts;
}

bool is_k_cover(const SetFamily& fam, int k) {
  if (k < 1) fail(Err::invalid_argument, "k must be positive");
  for (int c : cover_profile(fam))
    if (c < k) return false;
  return true;
}

bool is_uniform_k_cover(const SetFamily& fam, int k) {
  if (k < 1) fail(Err::invalid_argument, "k must be positive");
  for (int c : cover_profile(fam))
    if (c != k) return false;
  return true;
}

SetFamily elementary_compression(const SetFamily& fam, int i, int j) {
  const auto& ms = fam.members();
  if (i < 0 || j < 0 || i >= fam.size() || j >= fam.size() || i == j)
    fail(Err::invalid_argument, "member indices out of range or equal");
  SubsetMask a = ms[i], b = ms[j];
  if (a.subset_of(b) || b.subset_of(a))
    fail(Err::nested_pair, "members " + a.to_string() + " and " + b.to_string() + " are nested");
  std::vector<SubsetMask> out;
  out.reserve(ms.size());
  for (int t = 0; t < fam.size(); ++t)
    if (t != i && t != j) out.push_back(ms[t]);
  SubsetMask inter = a & b;
  if (!inter.empty()) out.push_back(inter);
  out.push_back(a | b);
  return SetFamily(fam.n(), std::move(out));
}

long potential(const SetFamily& fam) {
  long p = 0;
  for (const auto& a : fam.members()) p += long(a.count()) * a.count();
  return p;
}

SetFamily minimal_compression(const SetFamily& fam) {
  CoverProfile counts = cover_profile(fam);
  int max_count = 0;
  for (int c : counts) max_count = std::max(max_count, c);
  std::vector<SubsetMask> rows;
  for (int j = 1; j <= max_count; ++j) {
    SubsetMask row;
    for (int i = 1; i <= fam.n(); ++i)
      if (counts[i - 1] >= j) row.bits |= 1u << (i - 1);
    rows.push_back(row);
  }
  return SetFamily(fam.n(), std::move(rows));
}

namespace {

std::vector<std::uint32_t> state_key(const std::vector<SubsetMask>& ms) {
  std::vector<std::uint32_t> key;
  key.reserve(ms.size());
  for (const auto& m : ms) key.push_back(m.bits);
  return key;
}

}  // namespace

CompressionRelation compression_relation(const SetFamily& from, const SetFamily& to) {
  if (from.n() != to.n()) fail(Err::invalid_argument, "families on different ground sets");
  if (from.total_elements() > 10)
    fail(Err::instance_too_large, "compression search limited to families with at most 10 elements");
  if (from == to) return CompressionRelation::equal;
  // Elementary compressions preserve the cover profile, so a mismatch settles
  // it without searching.
  if (cover_profile(from) != cover_profile(to)) return CompressionRelation::incomparable;
  const long target_potential = potential(to);
  const int target_size = to.size();
  if (potential(from) >= target_potential) return CompressionRelation::incomparable;

  std::set<std::vector<std::uint32_t>> seen;
  std::queue<SetFamily> frontier;
  frontier.push(from);
  seen.insert(state_key(from.members()));
  while (!frontier.empty()) {
    SetFamily cur = std::move(frontier.front());
    frontier.pop();
    for (int i = 0; i < cur.size(); ++i) {
      for (int j = i + 1; j < cur.size(); ++j) {
        SubsetMask a = cur.members()[i], b = cur.members()[j];
        if (a.subset_of(b) || b.subset_of(a)) continue;
        SetFamily next = elementary_compression(cur, i, j);
        if (next == to) return CompressionRelation::strictly_compresses;
        if (potential(next) >= target_potential) continue;  // potential only grows
        if (next.size() < target_size) continue;            // member count only shrinks
        if (seen.insert(state_key(next.members())).second) frontier.push(next);
      }
    }
  }
  return CompressionRelation::incomparable;
}

bool compresses_to(const SetFamily& from, const SetFamily& to) {
  return compression_relation(from, to) != CompressionRelation::incomparable;
}

}  // namespace ineq
