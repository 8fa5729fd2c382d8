#include <random>

#include "doctest.h"
#include "skeintorus/mapping.hpp"
#include "support.hpp"

using namespace skeintorus;

TEST_SUITE("mapping") {

TEST_CASE("matrices") {
  CHECK_THROWS_AS(MappingClass(1, 1, 1, 1), std::invalid_argument);
  const auto t = MappingClass::twist();
  CHECK(t.apply(3, 1) == std::pair<std::int64_t, std::int64_t>{3, 4});
  CHECK(t * t.inverse() == MappingClass::identity());
  CHECK(t.power(3) == t * t * t);
  CHECK(t.power(-2) == t.inverse() * t.inverse());
  CHECK(t.power(0) == MappingClass::identity());
}

TEST_CASE("reduce_pair normal form preserves the determinant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> v(-30, 30);
  int tried = 0;
  while (tried < 2000) {
    const std::int64_t p = v(rng), q = v(rng), r = v(rng), s = v(rng);
    const std::int64_t det = p * s - r * q;
    if (det == 0) continue;
    ++tried;
    const auto red = reduce_pair(p, q, r, s);
    CHECK(red.phi.apply(r, s) == std::pair<std::int64_t, std::int64_t>{0, red.s1});
    CHECK(red.phi.apply(red.sign * p, red.sign * q) ==
          std::pair<std::int64_t, std::int64_t>{red.p1, red.q1});
    CHECK(red.p1 * red.s1 == std::abs(det));
    CHECK(red.p1 > 0);
    CHECK(red.s1 > 0);
    CHECK(0 <= red.q1);
    CHECK(red.q1 < red.p1);
  }
  CHECK_THROWS_AS(reduce_pair(2, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_pair(2, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("action on skein elements is a group action") {
  std::mt19937 rng(4);
  const MappingClass gens[] = {MappingClass::twist(), MappingClass(0, 1, -1, 0),
                               MappingClass(1, 0, 1, 1)};
  for (int i = 0; i < 100; ++i) {
    const auto x = testing_support::random_element(rng);
    const auto& f = gens[i % 3];
    const auto& g = gens[(i + 1) % 3];
    CHECK(act_on_skein(f * g, x) == act_on_skein(f, act_on_skein(g, x)));
    CHECK(act_on_skein(f.inverse(), act_on_skein(f, x)) == x);
    CHECK(act_on_pq(f, {0, 0}) == PQ{0, 0});
  }
}

TEST_CASE("twist, opposition and reverse on the basis") {
  CHECK(tw(chebyshev_element(2, 1)) == chebyshev_element(2, 3));
  CHECK(tw_inv(tw(chebyshev_element(5, -2))) == chebyshev_element(5, -2));
  CHECK(tw_pow(chebyshev_element(1, 0), -4) == chebyshev_element(1, -4));
  const auto x = chebyshev_element(4, 1, 1, LaurentPoly::monomial(3));
  CHECK(opp(x) == chebyshev_element(4, 3, 1, LaurentPoly::monomial(-3)));
  CHECK(rev(chebyshev_element(4, 1)) == chebyshev_element(1, 4));
  std::mt19937 rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto y = testing_support::random_element(rng);
    CHECK(opp(opp(y)) == y);
    CHECK(rev(rev(y)) == y);
    CHECK(tw_pow(tw_pow(y, 5), -5) == y);
  }
}

}
