#pragma once

#include <cstdint>

namespace ineq {

// splitmix64. Self-contained so seeded sweeps produce identical streams on
// every platform (std::uniform_int_distribution does not guarantee that).
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  // uniform in [lo, hi], inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace ineq
