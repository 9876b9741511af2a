#include "ineq/search.hpp"

#include <bit>

#include "ineq/rng.hpp"

namespace ineq {

namespace {

// non-empty subsets of {0,...,order-1} with at most max_size elements, masks
// ascending
std::vector<std::uint32_t> subset_masks(int order, int max_size) {
  if (order > 16) fail(Err::instance_too_large, "search limited to groups of order 16");
  std::vector<std::uint32_t> out;
  std::uint32_t full = (1u << order) - 1u;
  for (std::uint32_t m = 1; m <= full; ++m)
    if (std::popcount(m) <= max_size) out.push_back(m);
  return out;
}

std::vector<Elem> mask_to_set(std::uint32_t mask) {
  std::vector<Elem> s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s.push_back({i});
  return s;
}

Json sets_json(const std::vector<std::uint32_t>& masks) {
  Json sets = Json::array();
  for (auto m : masks) {
    Json s = Json::array();
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) s.push_back(i);
    sets.push_back(s);
  }
  return sets;
}

}  // namespace

SearchSummary run_search(const std::vector<CatalogEntry>& catalog, const SearchOptions& opt,
                         const std::function<void(const std::string&)>& emit) {
  if (opt.n < 1 || opt.n > 6) fail(Err::invalid_argument, "search supports 1..6 sets");
  if (opt.set_size_max < 1) fail(Err::invalid_argument, "set size bound must be positive");
  if (opt.sample && opt.budget == std::numeric_limits<std::uint64_t>::max())
    fail(Err::invalid_argument, "sampling needs a finite --budget");

  SearchSummary summary;
  auto run_instance = [&](const CatalogEntry& entry, const std::vector<std::uint32_t>& masks) {
    Json line{{"instance", Json{{"group", entry.name}, {"sets", sets_json(masks)}}},
              {"conjecture", conjecture_name(opt.which)}};
    try {
      std::vector<std::vector<Elem>> sets;
      for (auto m : masks) sets.push_back(mask_to_set(m));
      SumsetInstance inst(entry.group, std::move(sets));
      ConjectureReport rep = conjecture_feasibility(inst, opt.which, opt.tol);
      Json rj = to_json(rep);
      line["feasible"] = rep.feasible;
      if (rep.feasible) {
        line["witness"] = rj["witness"];
        summary.feasible++;
      } else {
        line["violation"] = rj["violation"];
        line["sizes"] = rj["sizes"];
        line["reverified"] = rep.reverified;
        summary.infeasible++;
      }
    } catch (const Error& e) {
      line["error"] = e.what();
      summary.errors++;
    }
    summary.instances++;
    emit(line.dump());
  };

  if (opt.sample) {
    Rng rng(opt.seed);
    for (std::uint64_t it = 0; it < opt.budget; ++it) {
      const CatalogEntry& entry = catalog[rng.below(catalog.size())];
      auto pool = subset_masks(entry.group.order(), opt.set_size_max);
      std::vector<std::uint32_t> masks;
      for (int i = 0; i < opt.n; ++i) masks.push_back(pool[rng.below(pool.size())]);
      run_instance(entry, masks);
    }
    return summary;
  }

  for (const auto& entry : catalog) {
    if (entry.group.order() <= 0)
      fail(Err::invalid_argument, "search catalogs must hold finite groups");
    auto pool = subset_masks(entry.group.order(), opt.set_size_max);
    std::vector<std::size_t> odo(opt.n, 0);
    bool done = false;
    while (!done) {
      if (summary.instances >= opt.budget) return summary;
      std::vector<std::uint32_t> masks;
      for (auto i : odo) masks.push_back(pool[i]);
      run_instance(entry, masks);
      // advance odometer, last slot fastest
      int slot = opt.n - 1;
      while (slot >= 0) {
        if (++odo[slot] < pool.size()) break;
        odo[slot] = 0;
        --slot;
      }
      done = slot < 0;
    }
  }
  return summary;
}

Json to_json(const SearchSummary& s) {
  return Json{{"instances", s.instances},
              {"feasible", s.feasible},
              {"infeasible", s.infeasible},
              {"errors", s.errors}};
}

}  // namespace ineq
