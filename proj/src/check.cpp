#include "skeintorus/check.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace skeintorus::check {

namespace {

std::string first_difference(const MulticurveElement& a, const MulticurveElement& b) {
  auto describe = [](const MulticurveKey& k) {
    return "d^" + std::to_string(k.boundary_pow) + "*(" + std::to_string(k.curve.p) + "," +
           std::to_string(k.curve.q) + ")";
  };
  for (const auto& [k, v] : a.terms()) {
    if (b.coefficient(k) != v) return describe(k);
  }
  for (const auto& [k, v] : b.terms()) {
    if (a.coefficient(k) != v) return describe(k);
  }
  return {};
}

nlohmann::json pq_json(PQ v) { return {v.p, v.q}; }

}  // namespace

bool is_positive(const SkeinElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return t.second.all_coefficients_nonnegative(); });
}

SkeinElement oracle_discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                                int budget, std::uint64_t seed) {
  const std::int64_t det = p * s - r * q;
  SkeinElement rest = from_multicurve(oracle::oracle_multiply(
      chebyshev_element(p, q), chebyshev_element(r, s), budget, seed, 1));
  rest -= chebyshev_element(p + r, q + s, 0, LaurentPoly::monomial(det));
  rest -= chebyshev_element(p - r, q - s, 0, LaurentPoly::monomial(-det));
  SkeinElement out;
  for (const auto& [key, coeff] : rest.terms()) {
    if (key.eta_pow == 0) throw std::logic_error("state sum minus product-to-sum is not a multiple of eta");
    out.add_term({key.eta_pow - 1, key.curve}, coeff);
  }
  return out;
}

nlohmann::json DifferentialReport::to_json() const {
  nlohmann::json j;
  j["status"] = ok() ? "PASS" : "FAIL";
  j["pairs"] = pairs;
  j["mismatches"] = mismatches;
  j["closed_torus_failures"] = closed_torus_failures;
  j["positivity_failures"] = positivity_failures;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) {
    j["failures"].push_back({{"x", pq_json(f.x)},
                             {"y", pq_json(f.y)},
                             {"crossings", f.crossings},
                             {"oracle_match", f.oracle_match},
                             {"closed_torus_ok", f.closed_torus_ok},
                             {"positive", f.positive},
                             {"locus", f.locus},
                             {"engine", to_string(to_multicurve(f.engine))},
                             {"oracle", to_string(f.oracle)}});
  }
  return j;
}

DifferentialReport run_differential(const DifferentialRanges& ranges,
                                    const DifferentialOptions& options, MemoTable& table) {
  if (ranges.max_crossings > options.budget) {
    throw oracle::BudgetExceeded("requested crossing number " +
                                 std::to_string(ranges.max_crossings) + " exceeds budget " +
                                 std::to_string(options.budget));
  }
  DifferentialReport report;
  bool fault_pending = options.inject_fault;
  for (std::int64_t p = ranges.p_min; p <= ranges.p_max; ++p) {
    for (std::int64_t q = -ranges.q_max; q <= ranges.q_max; ++q) {
      for (std::int64_t r = ranges.r_min; r <= ranges.r_max; ++r) {
        for (std::int64_t s = -ranges.s_max; s <= ranges.s_max; ++s) {
          const std::int64_t c = std::llabs(p * s - r * q);
          if (c > ranges.max_crossings) continue;
          const SkeinElement x = chebyshev_element(p, q);
          const SkeinElement y = chebyshev_element(r, s);
          PairOutcome out;
          out.x = {p, q};
          out.y = {r, s};
          out.crossings = c;
          out.engine = multiply(x, y, table);
          if (fault_pending && c >= 2) {
            out.engine.add_term(out.engine.terms().begin()->first, 1);
            fault_pending = false;
          }
          out.oracle = oracle::oracle_multiply(x, y, options.budget, options.seed, options.threads);
          const MulticurveElement engine_m = to_multicurve(out.engine);
          out.oracle_match = engine_m == out.oracle;
          if (!out.oracle_match) out.locus = first_difference(engine_m, out.oracle);

          // Closed torus: two-term product-to-sum.
          SkeinElement two_term = chebyshev_element(p + r, q + s, 0,
                                                    LaurentPoly::monomial(p * s - r * q));
          two_term += chebyshev_element(p - r, q - s, 0, LaurentPoly::monomial(r * q - p * s));
          out.closed_torus_ok = closed_torus_reduction(out.oracle) ==
                                closed_torus_reduction(to_multicurve(two_term));
          out.positive = is_positive(out.engine);

          ++report.pairs;
          report.mismatches += !out.oracle_match;
          report.closed_torus_failures += !out.closed_torus_ok;
          report.positivity_failures += !out.positive;
          if (!out.oracle_match || !out.closed_torus_ok || !out.positive) {
            report.failures.push_back(std::move(out));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace skeintorus::check
