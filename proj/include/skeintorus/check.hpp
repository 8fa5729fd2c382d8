#pragma once

// Engine against brute force over a box of torus-link pairs.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeintorus/discrepancy.hpp"
#include "skeintorus/oracle.hpp"

namespace skeintorus::check {

struct DifferentialRanges {
  std::int64_t p_min = 1, p_max = 5;
  std::int64_t q_max = 5;  // |q| <= q_max
  std::int64_t r_min = 0, r_max = 3;
  std::int64_t s_max = 3;  // |s| <= s_max
  std::int64_t max_crossings = 16;
};

struct DifferentialOptions {
  int budget = oracle::kDefaultBudget;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  // Perturbs one engine coefficient to exercise the failure path.
  bool inject_fault = false;
};

struct PairOutcome {
  PQ x, y;
  std::int64_t crossings = 0;
  bool oracle_match = true;
  bool closed_torus_ok = true;
  bool positive = true;
  std::string locus;  // first differing multicurve, if any
  SkeinElement engine;
  MulticurveElement oracle;
};

struct DifferentialReport {
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::size_t closed_torus_failures = 0;
  std::size_t positivity_failures = 0;
  std::vector<PairOutcome> failures;

  bool ok() const {
    return mismatches == 0 && closed_torus_failures == 0 && positivity_failures == 0;
  }
  nlohmann::json to_json() const;
};

/// Every structure constant (coefficient of eta^k T(p,q)) has non-negative
/// integer coefficients.
bool is_positive(const SkeinElement& x);

/// D(p,q;r,s) from the state sum alone: (T(p,q)T(r,s) - two-term sum) / eta.
/// Throws std::logic_error if the remainder is not divisible by eta.
SkeinElement oracle_discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                                int budget = oracle::kDefaultBudget, std::uint64_t seed = 0);

/// Throws oracle::BudgetExceeded if ranges.max_crossings > options.budget.
DifferentialReport run_differential(const DifferentialRanges& ranges,
                                    const DifferentialOptions& options, MemoTable& table);

}  // namespace skeintorus::check
