#include "ineq/dist.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ineq {

JointDistribution::JointDistribution(std::vector<std::vector<std::int64_t>> supports,
                                     std::vector<std::pair<Tuple, Rat>> entries)
    : supports_(std::move(supports)), entries_(std::move(entries)) {
  if (supports_.size() > SubsetMask::max_ground)
    fail(Err::invalid_argument, "too many variables");
  for (auto& sup : supports_) {
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    if (sup.empty()) fail(Err::invalid_argument, "empty variable support");
  }
  Rat total;
  std::set<Tuple> seen;
  for (const auto& [x, p] : entries_) {
    if (x.size() != supports_.size()) fail(Err::invalid_argument, "tuple arity mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!std::binary_search(supports_[i].begin(), supports_[i].end(), x[i]))
        fail(Err::invalid_argument, "tuple coordinate outside its support");
    if (p.is_negative()) fail(Err::invalid_argument, "negative probability");
    if (!seen.insert(x).second) fail(Err::invalid_argument, "duplicate pmf tuple");
    total += p;
  }
  if (total != Rat(1)) fail(Err::invalid_argument, "pmf must sum to exactly 1, got " + total.to_string());
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

JointDistribution marginal(const JointDistribution& d, SubsetMask A) {
  std::vector<int> keep;
  for (int i = 1; i <= d.n(); ++i)
    if (A.contains(i)) keep.push_back(i - 1);
  std::map<Tuple, Rat> grouped;
  for (const auto& [x, p] : d.entries()) {
    Tuple proj;
    proj.reserve(keep.size());
    for (int c : keep) proj.push_back(x[c]);
    grouped[proj] += p;
  }
  std::vector<std::vector<std::int64_t>> supports;
  for (int c : keep) supports.push_back(d.supports()[c]);
  std::vector<std::pair<Tuple, Rat>> entries(grouped.begin(), grouped.end());
  return JointDistribution(std::move(supports), std::move(entries));
}

JointDistribution uniform_distribution(const std::vector<Tuple>& points) {
  if (points.empty()) fail(Err::invalid_argument, "uniform distribution over empty set");
  std::size_t arity = points.front().size();
  std::vector<std::vector<std::int64_t>> supports(arity);
  for (const auto& p : points) {
    if (p.size() != arity) fail(Err::invalid_argument, "ragged point set");
    for (std::size_t i = 0; i < arity; ++i) supports[i].push_back(p[i]);
  }
  Rat w(1, static_cast<std::int64_t>(points.size()));
  std::vector<std::pair<Tuple, Rat>> entries;
  entries.reserve(points.size());
  for (const auto& p : points) entries.emplace_back(p, w);
  return JointDistribution(std::move(supports), std::move(entries));
}

JointDistribution random_distribution(Rng& rng, int n, int max_support, int max_denominator) {
  std::vector<std::vector<std::int64_t>> supports(n);
  std::size_t tuples = 1;
  for (auto& sup : supports) {
    int size = static_cast<int>(rng.range(2, std::max(2, max_support)));
    for (int v = 0; v < size; ++v) sup.push_back(v);
    tuples *= static_cast<std::size_t>(size);
  }
  int den = static_cast<int>(rng.range(1, max_denominator));
  std::vector<std::int64_t> counts(tuples, 0);
  for (int b = 0; b < den; ++b) counts[rng.below(tuples)]++;

  std::vector<std::pair<Tuple, Rat>> entries;
  Tuple x(n, 0);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t rest = t;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = static_cast<std::int64_t>(rest % supports[i].size());
      rest /= supports[i].size();
    }
    if (counts[t] > 0) entries.emplace_back(x, Rat(counts[t], den));
  }
  return JointDistribution(std::move(supports), std::move(entries));
}

}  // namespace ineq
