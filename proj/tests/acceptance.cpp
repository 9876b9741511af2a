// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Frozen seeds throughout; every tolerance is pinned in the criterion body.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ineq/conjecture.hpp"
#include "ineq/entropy.hpp"
#include "ineq/io.hpp"
#include "ineq/lattice.hpp"
#include "ineq/marking.hpp"
#include "ineq/search.hpp"
#include "oracles.hpp"

using namespace ineq;
using test::family;
using test::mask;

namespace {

constexpr double tol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(INEQ_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Elem> zset(std::initializer_list<std::int64_t> vals) {
  std::vector<Elem> out;
  for (auto v : vals) out.push_back({v});
  return out;
}

// --- criterion 1: chain reproduction, under a millisecond -------------------
Outcome criterion1() {
  Outcome o;
  SetFamily fam = test::chain_demo_family();
  auto start = std::chrono::steady_clock::now();
  SetFamily sharp = minimal_compression(fam);
  double elapsed = seconds_since(start);
  o.require(sharp == family(6, {{1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4, 5, 6}}),
            "chain mismatch");
  o.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + "s");
  o.detail = o.pass ? "chain exact, " + std::to_string(elapsed * 1e6) + "us" : o.detail;
  return o;
}

// --- criterion 2: worked compression example + 1000-distribution sweep ------
Outcome criterion2() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  SetFamily famA = family(4, {{1, 2}, {1, 3}, {4}});
  SetFamily famB = family(4, {{1, 2, 3}, {1, 4}});
  o.require(compresses_to(famA, famB), "compresses_to is false");
  test::Rng rng(4202);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    JointDistribution d = random_distribution(rng, 4, 3, 64);
    EntropyReport rep = verify_gen1(d, famA, famB, tol);
    worst = std::min(worst, rep.slack());
    o.require(rep.slack() >= -tol, "slack " + std::to_string(rep.slack()) + " at trial " +
                                       std::to_string(trial));
  }
  double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s");
  if (o.pass)
    o.detail = "1000 distributions, min slack " + std::to_string(worst) + ", " +
               std::to_string(elapsed) + "s";
  return o;
}

// --- criterion 3: theorem suites, 1000 distributions each -------------------
Outcome criterion3() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();

  {
    test::Rng rng(31001);
    for (int t = 0; t < 1000; ++t) {
      int n = static_cast<int>(rng.range(2, 5));
      JointDistribution d = random_distribution(rng, n, 3, 64);
      if (!check_submodularity(d, test::random_nonempty_mask(rng, n),
                               test::random_nonempty_mask(rng, n), tol)
               .holds())
        o.require(false, "submodularity violated at trial " + std::to_string(t));
    }
  }
  {
    test::Rng rng(31002);
    for (int t = 0; t < 1000; ++t) {
      int n = static_cast<int>(rng.range(2, 5));
      int k = static_cast<int>(rng.range(1, 2));
      JointDistribution d = random_distribution(rng, n, 3, 64);
      if (!verify_shearer(d, test::random_k_cover(rng, n, k), k, tol).holds())
        o.require(false, "k-cover bound violated at trial " + std::to_string(t));
    }
  }
  {
    test::Rng rng(31003);
    for (int t = 0; t < 1000; ++t) {
      int n = static_cast<int>(rng.range(2, 5));
      int k = static_cast<int>(rng.range(1, 2));
      JointDistribution d = random_distribution(rng, n, 3, 64);
      MadimanTetaliReport rep = verify_madiman_tetali(d, test::random_uniform_cover(rng, n, k), k, tol);
      if (!rep.holds()) o.require(false, "two-sided bound violated at trial " + std::to_string(t));
    }
  }
  {
    test::Rng rng(31004);
    for (int t = 0; t < 1000; ++t) {
      int n = static_cast<int>(rng.range(2, 5));
      JointDistribution d = random_distribution(rng, n, 3, 64);
      if (!verify_gen2(d, test::random_family(rng, n, 4), tol).holds())
        o.require(false, "minimal-compression bound violated at trial " + std::to_string(t));
    }
  }
  {
    test::Rng rng(31005);
    for (int t = 0; t < 1000; ++t) {
      int n = static_cast<int>(rng.range(2, 5));
      JointDistribution d = random_distribution(rng, n, 3, 64);
      BoxCertificate cert = box_certificate(d);
      if (!verify_box_certificate(d, cert, tol).holds)
        o.require(false, "certificate sandwich violated at trial " + std::to_string(t));
    }
  }

  double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "took " + std::to_string(elapsed) + "s");
  if (o.pass) o.detail = "5 suites x 1000 distributions, " + std::to_string(elapsed) + "s";
  return o;
}

// --- criterion 4: projection counterexample, exact integers -----------------
Outcome criterion4() {
  Outcome o;
  ProjectionCounterexample ce = projection_counterexample();
  o.require(ce.full_size == 5 && ce.size_1 == 2 && ce.size_12 == 3 && ce.size_13 == 3,
            "projection sizes mismatch");
  o.require(ce.compressed_product == 10 && ce.original_product == 9, "products mismatch");
  o.require(ce.compressed_product > ce.original_product, "no violation");
  o.require(minimal_compression(ce.original) == ce.compressed, "family is not the compression");
  JointDistribution u = uniform_distribution(ce.set.points());
  o.require(verify_gen2(u, ce.original, tol).holds(), "entropy analogue failed");
  if (o.pass) o.detail = "sizes (5,2,3,3), products 10 > 9, entropy analogue holds";
  return o;
}

// --- criterion 5: the Z13 display -------------------------------------------
Outcome criterion5() {
  Outcome o;
  GroupContext z13 = GroupContext::cyclic(13);
  std::vector<Elem> s = zset({0, 1, 3, 5});
  SumsetInstance inst(z13, {s, s, s});
  o.require(sumset(inst, mask({1, 2})).size() == 9, "|S1+S2| != 9");
  o.require(sumset(inst, mask({1, 3})).size() == 9, "|S1+S3| != 9");
  o.require(sumset(inst, mask({2, 3})).size() == 9, "|S2+S3| != 9");
  o.require(sumset(inst, mask({1, 2, 3})).size() == 12, "|S1+S2+S3| != 12");
  CauchyDavenportReport rep = verify_cauchy_davenport(inst);
  o.require(rep.pair_cover.has_value(), "no additive cover section");
  if (rep.pair_cover) {
    o.require(rep.pair_cover->lhs == 22 && rep.pair_cover->rhs == 24, "22 < 24 not reproduced");
    o.require(!rep.pair_cover->holds, "strengthening unexpectedly holds");
  }
  if (o.pass) o.detail = "pairwise 9, triple 12, 22 < 24";
  return o;
}

// --- criterion 6: containment-refined product bound --------------------------
Outcome criterion6() {
  Outcome o;
  GymrReport eq = verify_gymr({1, 2, 3}, {{0, 3}, {0}}, {0, 3});
  o.require(eq.lhs.to_string() == "36" && eq.rhs.to_string() == "36" && eq.equality,
            "equality case is not 36 = 36");

  test::Rng rng(6061);
  for (int trial = 0; trial < 200; ++trial) {
    int k = static_cast<int>(rng.range(1, 3));
    std::vector<std::vector<std::int64_t>> bs;
    std::set<std::int64_t> bsum{0};
    for (int i = 0; i < k; ++i) {
      std::set<std::int64_t> b;
      int size = static_cast<int>(rng.range(1, 5));
      for (int t = 0; t < size; ++t) b.insert(rng.range(0, 20));
      bs.emplace_back(b.begin(), b.end());
      std::set<std::int64_t> next;
      for (auto x : bsum)
        for (auto y : b) next.insert(x + y);
      bsum = std::move(next);
    }
    std::vector<std::int64_t> pool(bsum.begin(), bsum.end());
    std::set<std::int64_t> c{pool[rng.below(pool.size())]};
    for (auto x : pool)
      if (rng.chance(1, 2)) c.insert(x);
    std::vector<std::int64_t> a;
    int asize = static_cast<int>(rng.range(1, 5));
    for (int t = 0; t < asize; ++t) a.push_back(rng.range(0, 20));
    GymrReport rep = verify_gymr(a, bs, {c.begin(), c.end()});
    o.require(rep.holds, "bound violated at trial " + std::to_string(trial));
    o.require(rep.embedded.holds, "embedded cover bound violated at trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "equality 36 = 36, 200 random instances hold";
  return o;
}

// --- criterion 7: marking algorithm sweep ------------------------------------
Outcome criterion7() {
  Outcome o;
  test::Rng rng(7077);
  SetFamily pairs = family(3, {{1, 2}, {1, 3}, {2, 3}});
  GroupContext z = GroupContext::free_abelian(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<Elem>> sets;
    for (int i = 0; i < 3; ++i) {
      std::set<std::int64_t> vals;
      int size = static_cast<int>(rng.range(1, 4));
      for (int t = 0; t < size; ++t) vals.insert(rng.range(0, 12));
      std::vector<Elem> s;
      for (auto v : vals) s.push_back({v});
      sets.push_back(std::move(s));
    }
    MarkingWitness w = marking_algorithm(SumsetInstance(z, std::move(sets)), pairs, 2);
    o.require(w.marks_distinct, "duplicate mark at trial " + std::to_string(trial));
    o.require(w.marks_in_restricted, "mark outside S' at trial " + std::to_string(trial));
    o.require(2 * (w.restricted_size - 1) >= w.cover_sum,
              "k(|S'|-1) below the cover sum at trial " + std::to_string(trial));
    o.require(w.total_marks == w.cover_sum, "marks missing at trial " + std::to_string(trial));
    o.require(w.full_size >= w.restricted_size, "|S| < |S'| at trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "500 instances: distinctness and the exact chain hold";
  return o;
}

// --- criterion 8: exhaustive additive bounds over small groups ---------------
Outcome criterion8() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();

  for (int m : {5, 7}) {
    GroupContext zp = GroupContext::cyclic(m);
    std::uint32_t full = (1u << m) - 1u;
    for (std::uint32_t m1 = 1; m1 <= full; ++m1) {
      for (std::uint32_t m2 = 1; m2 <= full; ++m2) {
        std::vector<Elem> s1, s2;
        for (int i = 0; i < m; ++i) {
          if (m1 & (1u << i)) s1.push_back({i});
          if (m2 & (1u << i)) s2.push_back({i});
        }
        if (!verify_cauchy_davenport(SumsetInstance(zp, {s1, s2})).holds) {
          o.require(false, "violation in Z_" + std::to_string(m));
          break;
        }
      }
    }
  }

  auto catalog = parse_catalog(slurp("groups_order_le8.json"));
  o.require(catalog.size() == 14, "catalog incomplete");
  for (const auto& entry : catalog) {
    int order = entry.group.order();
    std::uint32_t full = (1u << order) - 1u;
    for (std::uint32_t m1 = 1; m1 <= full; ++m1) {
      for (std::uint32_t m2 = 1; m2 <= full; ++m2) {
        std::vector<Elem> s1, s2;
        for (int i = 0; i < order; ++i) {
          if (m1 & (1u << i)) s1.push_back({i});
          if (m2 & (1u << i)) s2.push_back({i});
        }
        if (!verify_cauchy_davenport(SumsetInstance(entry.group, {s1, s2})).holds) {
          o.require(false, "violation in " + entry.name);
          break;
        }
      }
      if (!o.pass) break;
    }
    if (!o.pass) break;
  }

  double elapsed = seconds_since(start);
  o.require(elapsed < 120.0, "took " + std::to_string(elapsed) + "s");
  if (o.pass)
    o.detail = "Z5, Z7 and all 14 catalog groups exhaustively clean, " +
               std::to_string(elapsed) + "s";
  return o;
}

// --- criterion 9: conjecture harness -----------------------------------------
Outcome criterion9() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();

  // torsion-free cross-check
  test::Rng rng(9091);
  GroupContext z = GroupContext::free_abelian(1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.range(2, 3));
    std::vector<std::vector<Elem>> sets;
    for (int i = 0; i < n; ++i) {
      std::set<std::int64_t> vals;
      int size = static_cast<int>(rng.range(1, 4));
      for (int t = 0; t < size; ++t) vals.insert(rng.range(0, 12));
      std::vector<Elem> s;
      for (auto v : vals) s.push_back({v});
      sets.push_back(std::move(s));
    }
    ConjectureReport rep =
        conjecture_feasibility(SumsetInstance(z, std::move(sets)), Conjecture::additive_bound, tol);
    o.require(rep.feasible && rep.reverified,
              "torsion-free instance infeasible at trial " + std::to_string(trial));
  }

  // full search, both conjectures, deterministic
  auto catalog = parse_catalog(slurp("groups_order_le8.json"));
  SearchOptions opt;
  opt.n = 2;
  opt.set_size_max = 3;
  opt.tol = tol;

  std::uint64_t unverified_hits = 0;
  auto audit = [&](const std::string& line) {
    Json j = Json::parse(line);
    if (j.contains("feasible") && !j["feasible"].get<bool>() && !j["reverified"].get<bool>())
      ++unverified_hits;
  };

  opt.which = Conjecture::product_box;
  SearchSummary s61 = run_search(catalog, opt, audit);
  opt.which = Conjecture::additive_bound;
  std::vector<std::string> first_lines;
  SearchSummary s62a = run_search(catalog, opt, [&](const std::string& l) {
    audit(l);
    first_lines.push_back(l);
  });
  std::size_t replay_index = 0;
  bool replay_equal = true;
  SearchSummary s62b = run_search(catalog, opt, [&](const std::string& l) {
    if (replay_index >= first_lines.size() || first_lines[replay_index] != l)
      replay_equal = false;
    ++replay_index;
  });

  o.require(s61.errors == 0 && s62a.errors == 0, "per-instance errors in the stream");
  o.require(s61.instances == s62a.instances && s62a.instances == s62b.instances,
            "instance counts differ between runs");
  o.require(replay_equal && replay_index == first_lines.size(), "stream not deterministic");
  o.require(s62a.feasible == s62b.feasible && s62a.infeasible == s62b.infeasible,
            "summary not deterministic");
  o.require(unverified_hits == 0, "an infeasible hit failed its certificate audit");

  double elapsed = seconds_since(start);
  o.require(elapsed < 600.0, "took " + std::to_string(elapsed) + "s");
  if (o.pass) {
    std::ostringstream d;
    d << "200 torsion-free feasible; search " << s61.instances << " instances each: 6.1 "
      << s61.infeasible << " infeasible, 6.2 " << s62a.infeasible << " infeasible (all certified), "
      << elapsed << "s";
    o.detail = d.str();
  }
  return o;
}

// --- criterion 10: elimination vs independent oracle -------------------------
Outcome criterion10() {
  Outcome o;
  test::Rng rng(10101);
  for (int trial = 0; trial < 100; ++trial) {
    LinearSystem<Rat> sys = test::random_boxed_system(rng);
    auto res = feasible(sys);
    bool oracle = test::vertex_oracle(sys);
    o.require(res.feasible == oracle, "disagreement at trial " + std::to_string(trial));
    if (res.feasible)
      o.require(check_witness(sys, res.witness),
                "witness fails substitution at trial " + std::to_string(trial));
    else
      o.require(check_certificate(sys, res.certificate),
                "certificate fails audit at trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "100 systems agree; all witnesses and certificates re-verify";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<Outcome()> run;
  };
  std::vector<Entry> entries = {
      {1, "minimal compression of the six-member demo family", criterion1},
      {2, "worked compression example and 1000-distribution gen1 sweep", criterion2},
      {3, "theorem suites on 1000 seeded distributions each", criterion3},
      {4, "five-point projection counterexample with entropy cross-check", criterion4},
      {5, "Z13 sumset sizes and the failing pairwise strengthening", criterion5},
      {6, "containment-refined product bound incl. the equality case", criterion6},
      {7, "marking algorithm audits on 500 seeded instances", criterion7},
      {8, "exhaustive additive bound over Z5, Z7 and the order<=8 catalog", criterion8},
      {9, "conjecture feasibility harness and deterministic search", criterion9},
      {10, "rational elimination against the vertex oracle", criterion10},
  };
  int failures = 0;
  for (auto& e : entries) {
    Outcome o = e.run();
    std::printf("criterion %2d [%s] %s%s%s\n", e.id, o.pass ? "PASS" : "FAIL", e.label,
                o.detail.empty() ? "" : " — ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
