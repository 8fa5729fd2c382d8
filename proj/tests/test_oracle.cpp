#include <cstdlib>

#include "doctest.h"
#include "skeintorus/discrepancy.hpp"
#include "skeintorus/oracle.hpp"

using namespace skeintorus;
using namespace skeintorus::oracle;

TEST_SUITE("oracle") {

TEST_CASE("diagram shape") {
  const Diagram d({3, 1}, {1, 2});
  CHECK(d.crossings().size() == 5);
  CHECK(d.half_edges().size() == 20);
  CHECK(d.strands().size() == 2);
  const Diagram e({4, 2}, {0, 1});
  CHECK(e.crossings().size() == 4);
  CHECK(e.strands().size() == 3);  // two parallel over strands, one under
  for (const auto& c : e.crossings()) {
    CHECK(c.position.x >= 0);
    CHECK(c.position.x < e.scale());
    CHECK(c.position.y >= 0);
    CHECK(c.position.y < e.scale());
  }
  // every half-edge is the target of exactly one other
  std::vector<int> hits(d.half_edges().size(), 0);
  for (const auto& h : d.half_edges()) ++hits.at(h.target);
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("diagram json dump") {
  const auto j = Diagram({2, 1}, {0, 1}).to_json();
  CHECK(j["crossings"].size() == 2);
  CHECK(j["strands"].size() == 2);
  CHECK(j["over"] == nlohmann::json({2, 1}));
  const auto s = state_to_json(Diagram({2, 1}, {0, 1}), State{0b11});
  CHECK(s["weight"] == 2);
  CHECK(s.contains("loops"));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Diagram({0, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Diagram({21, 0}, {0, 1}), BudgetExceeded);
  CHECK_NOTHROW(Diagram({21, 0}, {0, 1}, 21));
  CHECK_THROWS_AS(oracle_product({0, {7, 0}}, {0, {0, 3}}, 20), BudgetExceeded);
}

TEST_CASE("Kauffman convention: (1,0) over (0,1)") {
  MulticurveElement expect = multicurve_element(1, 1, 0, LaurentPoly::monomial(1));
  expect += multicurve_element(1, -1, 0, LaurentPoly::monomial(-1));
  CHECK(oracle_product({0, {1, 0}}, {0, {0, 1}}) == expect);
  const Diagram d({1, 0}, {0, 1});
  const auto loops = trace_loops(d, State{1});
  REQUIRE(loops.size() == 1);
  CHECK(classify_loop(d, loops[0]).homology == PQ{1, 1});
}

TEST_CASE("disjoint curves multiply to the union") {
  CHECK(oracle_product({0, {1, 0}}, {0, {2, 0}}) == multicurve_element(3, 0));
  CHECK(oracle_product({2, {0, 0}}, {1, {1, 3}}) == multicurve_element(1, 3, 3));
}

TEST_CASE("example T(2,1) T(0,1)") {
  const auto m = oracle_multiply(chebyshev_element(2, 1), chebyshev_element(0, 1));
  CHECK(to_string(m) == "A^2*(2,2) + A^-2*(2,0) + d + (-A^2 - A^-2)");
  CHECK(from_multicurve(m) == multiply(chebyshev_element(2, 1), chebyshev_element(0, 1)));
}

TEST_CASE("result does not depend on strand offsets") {
  const MulticurveKey x{0, {3, 2}}, y{0, {2, -1}};
  const auto base = oracle_product(x, y, 20, 0, 1);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) CHECK(oracle_product(x, y, 20, seed, 1) == base);
  const MulticurveKey u{0, {4, 2}}, v{1, {1, 3}};
  const auto b2 = oracle_product(u, v, 20, 0, 1);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) CHECK(oracle_product(u, v, 20, seed, 1) == b2);
}

TEST_CASE("threaded and serial sums agree") {
  const MulticurveKey x{0, {5, 2}}, y{0, {1, 3}};
  CHECK(oracle_product(x, y, 20, 0, 1) == oracle_product(x, y, 20, 0, 4));
}

TEST_CASE("state weights") {
  CHECK(State{0}.weight_exponent(5) == -5);
  CHECK(State{0b10110}.weight_exponent(5) == 1);
}

}
