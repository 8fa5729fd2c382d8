#include "doctest.h"
#include "skeintorus/check.hpp"

using namespace skeintorus;

TEST_SUITE("check") {

TEST_CASE("positivity predicate") {
  CHECK(check::is_positive(chebyshev_element(2, 1, 1, quantum_int(3))));
  CHECK_FALSE(check::is_positive(chebyshev_element(2, 1, 0, LaurentPoly::monomial(2, -1))));
  CHECK(check::is_positive(SkeinElement{}));
}

TEST_CASE("oracle discrepancy") {
  CHECK(check::oracle_discrepancy(2, 1, 0, 1) == scalar_element(1));
  CHECK(check::oracle_discrepancy(3, 1, 2, 1).is_zero());
  CHECK(check::oracle_discrepancy(5, 2, 0, 1) == discrepancy(5, 2, 0, 1));
  CHECK(check::oracle_discrepancy(3, 1, -1, 2) == discrepancy(3, 1, -1, 2));
}

TEST_CASE("small differential box passes") {
  check::DifferentialRanges r;
  r.p_max = 3;
  r.q_max = 3;
  r.r_max = 2;
  r.s_max = 2;
  r.max_crossings = 10;
  MemoTable table;
  const auto report = check::run_differential(r, {}, table);
  CHECK(report.pairs > 50);
  CHECK(report.ok());
  CHECK(report.to_json()["mismatches"] == 0);
}

TEST_CASE("an injected fault is caught and located") {
  check::DifferentialRanges r;
  r.p_max = 2;
  r.q_max = 2;
  r.r_max = 1;
  r.s_max = 2;
  r.max_crossings = 8;
  check::DifferentialOptions o;
  o.inject_fault = true;
  MemoTable table;
  const auto report = check::run_differential(r, o, table);
  CHECK_FALSE(report.ok());
  REQUIRE_FALSE(report.failures.empty());
  CHECK_FALSE(report.failures.front().locus.empty());
}

TEST_CASE("budget is enforced up front") {
  check::DifferentialRanges r;
  r.max_crossings = 30;
  MemoTable table;
  CHECK_THROWS_AS(check::run_differential(r, {}, table), oracle::BudgetExceeded);
}

}
