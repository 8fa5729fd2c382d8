#include <random>

#include "doctest.h"
#include "skeintorus/laurent.hpp"
#include "support.hpp"

using namespace skeintorus;
using testing_support::random_poly;

TEST_SUITE("laurent") {

TEST_CASE("canonical form drops zeros and merges repeats") {
  const auto x = LaurentPoly::from_terms({{3, 2}, {-1, 5}, {3, -2}, {0, 0}, {-1, 1}});
  CHECK(x == LaurentPoly::monomial(-1, 6));
  CHECK(x.size() == 1);
  CHECK(LaurentPoly::from_terms({{1, 1}, {1, -1}}).is_zero());
  CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == LaurentPoly{});
    CHECK(x * LaurentPoly(1) == x);
    CHECK((x * LaurentPoly{}).is_zero());
    CHECK(-(-x) == x);
  }
}

TEST_CASE("conjugation is an involutive ring map") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_poly(rng), y = random_poly(rng);
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK(x.shifted(3).conjugate() == x.conjugate().shifted(-3));
  }
}

TEST_CASE("add_scaled agrees with the naive formula") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> k(-5, 5);
  for (int i = 0; i < 400; ++i) {
    auto x = random_poly(rng);
    const auto y = random_poly(rng);
    const int shift = k(rng);
    const Integer c = k(rng);
    const bool conj = i % 2 == 1;
    const LaurentPoly expect = x + (conj ? y.conjugate() : y) * LaurentPoly::monomial(shift, c);
    x.add_scaled(y, shift, c, conj);
    CHECK(x == expect);
  }
  // aliasing
  std::mt19937 rng2(3);
  auto x = random_poly(rng2, 6);
  const auto copy = x;
  x.add_scaled(x, 0, -1);
  CHECK(x.is_zero());
  x = copy;
  x.add_scaled(x, 2, 1, true);
  CHECK(x == copy + copy.conjugate().shifted(2));
}

TEST_CASE("extreme exponents and coefficient growth") {
  const auto x = LaurentPoly::monomial(-1000000, 1) + LaurentPoly::monomial(1000000, -1);
  CHECK(x.min_exponent() == -1000000);
  CHECK(x.max_exponent() == 1000000);
  const auto y = pow(LaurentPoly({{-1, 1}, {1, 1}}), 100);
  // central binomial coefficient C(100,50) exceeds 64 bits
  CHECK(y.coefficient(0) == Integer("100891344545564193334812497256"));
  CHECK(y.coefficient(1) == 0);
}

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(1) == LaurentPoly(1));
  CHECK(quantum_int(2) == LaurentPoly({{-2, 1}, {2, 1}}));
  CHECK(quantum_int(4) == LaurentPoly({{-6, 1}, {-2, 1}, {2, 1}, {6, 1}}));
  const LaurentPoly denom({{2, 1}, {-2, -1}});
  for (int k = 0; k < 30; ++k) {
    CHECK(quantum_int(k) * denom == LaurentPoly({{2 * k, 1}, {-2 * k, -1}}));
    CHECK(quantum_int(k).conjugate() == quantum_int(k));
  }
  CHECK_THROWS_AS(quantum_int(-1), std::invalid_argument);
  CHECK(loop_value() == LaurentPoly({{2, -1}, {-2, -1}}));
}

TEST_CASE("text and json round trips") {
  CHECK(LaurentPoly({{2, 1}, {0, 2}, {-2, 1}}).to_string() == "A^2 + 2 + A^-2");
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly::monomial(1, -3).to_string() == "-3*A");
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_poly(rng) * LaurentPoly(Integer("123456789012345678901234567890"));
    const auto j = x.to_json();
    CHECK(LaurentPoly::from_json(nlohmann::json::parse(j.dump())) == x);
  }
  CHECK_THROWS(LaurentPoly::from_json(nlohmann::json::parse(R"([[1, "x"]])")));
}

TEST_CASE("positivity predicate") {
  CHECK(LaurentPoly({{1, 2}, {-3, 1}}).all_coefficients_nonnegative());
  CHECK_FALSE(LaurentPoly({{1, 2}, {-3, -1}}).all_coefficients_nonnegative());
  CHECK(LaurentPoly{}.all_coefficients_nonnegative());
}

}
