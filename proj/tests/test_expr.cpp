#include "doctest.h"
#include "skeintorus/expr.hpp"

using namespace skeintorus;

TEST_SUITE("expr") {

TEST_CASE("atoms") {
  CHECK(parse_element("T(2,1)") == chebyshev_element(2, 1));
  CHECK(parse_element("T(-2, -1)") == chebyshev_element(2, 1));
  CHECK(parse_element("3") == scalar_element(3));
  CHECK(parse_element("A^-2") == scalar_element(LaurentPoly::monomial(-2)));
  CHECK(parse_element("A^(-2)") == scalar_element(LaurentPoly::monomial(-2)));
  CHECK(parse_element("A") == scalar_element(LaurentPoly::monomial(1)));
  CHECK(parse_element("eta") == chebyshev_prime_element(0, 0, 1));
  CHECK(parse_element("(2,0)") == from_multicurve(multicurve_element(2, 0)));
  CHECK(parse_element("d") == from_multicurve(multicurve_element(0, 0, 1)));
}

TEST_CASE("arithmetic") {
  CHECK(parse_element("T(2,1)*T(0,1)") == multiply(chebyshev_element(2, 1), chebyshev_element(0, 1)));
  CHECK(parse_element("-T(1,0) + 2*T(1,0)") == chebyshev_element(1, 0));
  CHECK(parse_element("A^2*(T(1,0) - T(0,1))") ==
        chebyshev_element(1, 0, 0, LaurentPoly::monomial(2)) -
            chebyshev_element(0, 1, 0, LaurentPoly::monomial(2)));
  CHECK(parse_element("d - eta + A^2 + A^-2").is_zero());
  // products are in the skein algebra, so order matters
  CHECK(parse_element("T(1,0)*T(0,1)") != parse_element("T(0,1)*T(1,0)"));
}

TEST_CASE("errors carry a position") {
  const auto position = [](const std::string& s) -> std::size_t {
    try {
      parse_element(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("T(1,") == 4);
  CHECK(position("T(1,2) +") == 8);
  CHECK(position("x") == 0);
  CHECK(position("T(1,2) T(3,4)") == 7);
  CHECK(position("") == 0);
  CHECK_THROWS_AS(parse_element("A^"), ParseError);
  CHECK_THROWS_AS(parse_element("((1,2)"), ParseError);
}

}
