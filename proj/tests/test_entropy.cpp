#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ineq/entropy.hpp"

using namespace ineq;
using test::family;
using test::mask;

namespace {

constexpr double eps = 1e-9;

JointDistribution fair_bits(int n) {
  std::vector<std::vector<std::int64_t>> supports(n, {0, 1});
  std::vector<std::pair<Tuple, Rat>> entries;
  Rat w(1, std::int64_t(1) << n);
  for (std::uint64_t t = 0; t < (1ull << n); ++t) {
    Tuple x(n);
    for (int i = 0; i < n; ++i) x[i] = (t >> i) & 1;
    entries.emplace_back(x, w);
  }
  return JointDistribution(std::move(supports), std::move(entries));
}

// uniform on {(0,...,0),(1,...,1)}
JointDistribution mirrored_bits(int n) {
  std::vector<std::vector<std::int64_t>> supports(n, {0, 1});
  return JointDistribution(std::move(supports),
                           {{Tuple(n, 0), Rat(1, 2)}, {Tuple(n, 1), Rat(1, 2)}});
}

}  // namespace

TEST_CASE("marginals sum probabilities exactly") {
  JointDistribution two = fair_bits(2);
  JointDistribution m1 = marginal(two, mask({1}));
  REQUIRE(m1.entries().size() == 2);
  CHECK(m1.entries()[0].second == Rat(1, 2));

  JointDistribution corr = mirrored_bits(2);
  JointDistribution m2 = marginal(corr, mask({2}));
  REQUIRE(m2.entries().size() == 2);
  CHECK(m2.entries()[0].second == Rat(1, 2));

  JointDistribution l = uniform_distribution({{0, 0}, {0, 1}, {1, 0}});
  JointDistribution m3 = marginal(l, mask({1}));
  REQUIRE(m3.entries().size() == 2);
  CHECK(m3.entries()[0].second == Rat(2, 3));
  CHECK(m3.entries()[1].second == Rat(1, 3));

  // empty marginal is the deterministic empty tuple
  JointDistribution m0 = marginal(two, SubsetMask{});
  REQUIRE(m0.entries().size() == 1);
  CHECK(m0.entries()[0].second == Rat(1));
}

TEST_CASE("entropy of basic distributions") {
  CHECK(entropy_bits(fair_bits(1)) == doctest::Approx(1.0).epsilon(eps));
  JointDistribution point({{7}}, {{{7}, Rat(1)}});
  CHECK(entropy_bits(point) == doctest::Approx(0.0).epsilon(eps));
  JointDistribution skew({{0, 1}}, {{{0}, Rat(2, 3)}, {{1}, Rat(1, 3)}});
  double expected = std::log2(3.0) - 2.0 / 3.0;
  CHECK(entropy_bits(skew) == doctest::Approx(expected).epsilon(eps));
}

TEST_CASE("conditional entropy") {
  JointDistribution ind = fair_bits(2);
  CHECK(conditional_entropy(ind, mask({1}), mask({2})) == doctest::Approx(1.0).epsilon(eps));
  JointDistribution corr = mirrored_bits(2);
  CHECK(conditional_entropy(corr, mask({1}), mask({2})) == doctest::Approx(0.0).epsilon(eps));
  // conditioning on nothing
  JointDistribution l = uniform_distribution({{0, 0}, {0, 1}, {1, 0}});
  CHECK(conditional_entropy(l, mask({1}), SubsetMask{}) ==
        doctest::Approx(subset_entropy(l, mask({1}))).epsilon(eps));
}

TEST_CASE("submodularity report") {
  JointDistribution d = uniform_distribution({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(check_submodularity(d, mask({1, 2}), mask({1, 2})).slack() ==
        doctest::Approx(0.0).epsilon(eps));
  CHECK(check_submodularity(d, mask({1}), mask({1, 2})).slack() ==
        doctest::Approx(0.0).epsilon(eps));

  test::Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    JointDistribution r = random_distribution(rng, 4, 3, 64);
    SubsetMask a = test::random_nonempty_mask(rng, 4);
    SubsetMask b = test::random_nonempty_mask(rng, 4);
    CHECK(check_submodularity(r, a, b).holds());
  }
}

TEST_CASE("k-cover entropy bound") {
  SetFamily pairs = family(3, {{1, 2}, {1, 3}, {2, 3}});
  EntropyReport ind = verify_shearer(fair_bits(3), pairs, 2);
  CHECK(ind.lhs == doctest::Approx(6.0).epsilon(eps));
  CHECK(ind.rhs == doctest::Approx(6.0).epsilon(eps));
  CHECK(ind.holds());

  EntropyReport corr = verify_shearer(mirrored_bits(3), pairs, 2);
  CHECK(corr.lhs == doctest::Approx(2.0).epsilon(eps));
  CHECK(corr.rhs == doctest::Approx(3.0).epsilon(eps));
  CHECK(corr.holds());

  CHECK_THROWS_AS(verify_shearer(fair_bits(3), family(3, {{1, 2}}), 1, 1e-9), Error);

  // Loomis-Whitney form on random distributions
  test::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    JointDistribution r = random_distribution(rng, 3, 4, 64);
    CHECK(verify_shearer(r, pairs, 2).holds());
  }
}

TEST_CASE("star sets") {
  auto [s1, u1] = star_sets(mask({2, 4}));
  CHECK(s1 == mask({1}));
  CHECK(u1 == mask({1, 3}));
  auto [s2, u2] = star_sets(mask({1}));
  CHECK(s2.empty());
  CHECK(u2.empty());
  auto [s3, u3] = star_sets(mask({1, 2, 3, 4}));
  CHECK(s3.empty());
  CHECK(u3.empty());
  CHECK_THROWS_AS(star_sets(SubsetMask{}), Error);
}

TEST_CASE("two-sided conditional bound") {
  SetFamily pairs = family(3, {{1, 2}, {1, 3}, {2, 3}});
  MadimanTetaliReport ind = verify_madiman_tetali(fair_bits(3), pairs, 2);
  CHECK(ind.lower.slack() == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(ind.upper.slack() == doctest::Approx(0.0).epsilon(1e-8));

  MadimanTetaliReport corr = verify_madiman_tetali(mirrored_bits(3), pairs, 2);
  CHECK(corr.holds());

  // the k-fold full family has empty stars on both sides
  SetFamily full2 = family(3, {{1, 2, 3}, {1, 2, 3}});
  JointDistribution d = uniform_distribution({{0, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  MadimanTetaliReport rep = verify_madiman_tetali(d, full2, 2);
  CHECK(rep.lower.lhs == doctest::Approx(rep.lower.rhs).epsilon(eps));
  CHECK(rep.upper.lhs == doctest::Approx(rep.upper.rhs).epsilon(eps));

  CHECK_THROWS_AS(verify_madiman_tetali(fair_bits(3), family(3, {{1, 2}, {3}, {1}}), 1, 1e-9),
                  Error);
}

TEST_CASE("chain-rule certificate") {
  BoxCertificate ind = box_certificate(fair_bits(3));
  for (double h : ind.h) CHECK(h == doctest::Approx(1.0).epsilon(eps));

  BoxCertificate corr = box_certificate(mirrored_bits(2));
  CHECK(corr.h[0] == doctest::Approx(1.0).epsilon(eps));
  CHECK(corr.h[1] == doctest::Approx(0.0).epsilon(eps));

  test::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.range(2, 5));
    JointDistribution r = random_distribution(rng, n, 3, 64);
    BoxCertificate cert = box_certificate(r);
    BoxCheckReport check = verify_box_certificate(r, cert, 1e-9);
    CAPTURE(trial);
    CHECK(check.holds);
  }
}

TEST_CASE("compression-order sum bound") {
  SetFamily famA = family(4, {{1, 2}, {1, 3}, {4}});
  SetFamily famB = family(4, {{1, 2, 3}, {1, 4}});
  JointDistribution d = fair_bits(4);
  EntropyReport rep = verify_gen1(d, famA, famB, 1e-9);
  CHECK(rep.holds());
  // equal families give zero slack
  CHECK(verify_gen1(d, famA, famA, 1e-9).slack() == doctest::Approx(0.0).epsilon(eps));
  // non-comparable pair
  CHECK_THROWS_AS(verify_gen1(d, famB, famA, 1e-9), Error);

  // a single elementary compression step is exactly submodularity
  test::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    SetFamily f = test::random_family(rng, 4, 3);
    if (f.total_elements() > 8) continue;
    for (int i = 0; i < f.size(); ++i) {
      for (int j = i + 1; j < f.size(); ++j) {
        SubsetMask a = f.members()[i], b = f.members()[j];
        if (a.subset_of(b) || b.subset_of(a)) continue;
        JointDistribution r = random_distribution(rng, 4, 3, 16);
        EntropyReport one = verify_gen1(r, f, elementary_compression(f, i, j), 1e-9);
        EntropyReport sub = check_submodularity(r, a, b, 1e-9);
        CHECK(one.holds());
        CHECK(one.slack() == doctest::Approx(sub.slack()).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("minimal-compression sum bound") {
  test::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    JointDistribution r = random_distribution(rng, 6, 2, 32);
    CHECK(verify_gen2(r, test::chain_demo_family(), 1e-9).holds());
  }
  // already a chain: zero slack
  SetFamily chain = family(3, {{1}, {1, 2}, {1, 2, 3}});
  JointDistribution d = uniform_distribution({{0, 0, 0}, {1, 0, 1}, {1, 1, 0}});
  CHECK(verify_gen2(d, chain, 1e-9).slack() == doctest::Approx(0.0).epsilon(eps));
  // on a uniform k-cover it reduces to the k-cover bound
  SetFamily pairs = family(3, {{1, 2}, {1, 3}, {2, 3}});
  EntropyReport g2 = verify_gen2(d, pairs, 1e-9);
  EntropyReport sh = verify_shearer(d, pairs, 2, 1e-9);
  CHECK(g2.slack() == doctest::Approx(sh.slack()).epsilon(1e-9));
}

TEST_CASE("entropy functional invariants on random distributions") {
  test::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.range(2, 4));
    JointDistribution d = random_distribution(rng, n, 3, 64);

    // chain rule
    double sum = 0.0;
    SubsetMask prefix;
    for (int i = 1; i <= n; ++i) {
      sum += conditional_entropy(d, mask({i}), prefix);
      prefix = prefix | mask({i});
    }
    CHECK(sum == doctest::Approx(entropy_bits(d)).epsilon(1e-7));

    // monotonicity and dropped conditioning
    SubsetMask a = test::random_nonempty_mask(rng, n);
    SubsetMask b = test::random_nonempty_mask(rng, n);
    SubsetMask c = test::random_nonempty_mask(rng, n);
    CHECK(subset_entropy(d, a) <= subset_entropy(d, a | b) + eps);
    CHECK(conditional_entropy(d, a, b | c) <= conditional_entropy(d, a, b) + eps);
    CHECK(conditional_entropy(d, a, b) >= -eps);
    CHECK(conditional_entropy(d, a, b) <= subset_entropy(d, a) + eps);
  }
}

TEST_CASE("report verdict boundaries") {
  EntropyReport r;
  r.tol = 1e-9;
  r.lhs = 1.0;
  r.rhs = 1.0 - 5e-10;
  CHECK(r.verdict() == Verdict::holds);
  r.rhs = 1.0 - 5e-8;
  CHECK(r.verdict() == Verdict::violated_within_tolerance);
  r.rhs = 0.5;
  CHECK(r.verdict() == Verdict::violated);
}
