#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include "ineq/io.hpp"

namespace ineq {

struct SearchOptions {
  Conjecture which = Conjecture::additive_bound;
  int n = 2;
  int set_size_max = 3;
  std::uint64_t seed = 0;
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
  bool sample = false;  // seeded random instances instead of exhaustive order
  double tol = 1e-9;
};

struct SearchSummary {
  std::uint64_t instances = 0;
  std::uint64_t feasible = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t errors = 0;
};

// Runs the conjecture over instances drawn from the catalog: every n-tuple of
// non-empty subsets of size <= set_size_max, in canonical order (group order,
// then subset masks ascending per slot), truncated at `budget`; or `budget`
// seeded random instances when sampling. One JSON line per instance goes to
// `emit`; per-instance failures are recorded in the stream and never abort
// the run.
SearchSummary run_search(const std::vector<CatalogEntry>& catalog, const SearchOptions& opt,
                         const std::function<void(const std::string&)>& emit);

Json to_json(const SearchSummary& s);

}  // namespace ineq
