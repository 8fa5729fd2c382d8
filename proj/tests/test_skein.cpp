#include <random>

#include "doctest.h"
#include "skeintorus/skein.hpp"
#include "support.hpp"

using namespace skeintorus;

namespace {

// Horner evaluation of an integer polynomial at a Laurent polynomial.
LaurentPoly evaluate(const std::vector<Integer>& coeffs, const LaurentPoly& x) {
  LaurentPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + LaurentPoly(*it);
  return out;
}

std::vector<Integer> compose(const std::vector<Integer>& f, const std::vector<Integer>& g) {
  // f(g(x)) via Horner on coefficient vectors
  std::vector<Integer> out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    std::vector<Integer> next(out.size() + g.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) next[i + j] += out[i] * g[j];
    if (next.empty()) next.push_back(0);
    next[0] += *it;
    out = std::move(next);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

const LaurentPoly kX({{-1, 1}, {1, 1}});  // A + A^-1

}  // namespace

TEST_SUITE("skein") {

TEST_CASE("Chebyshev polynomials: low degrees") {
  CHECK(chebyshev_T(0) == std::vector<Integer>{2});
  CHECK(chebyshev_T_prime(0) == std::vector<Integer>{1});
  CHECK(chebyshev_T(1) == std::vector<Integer>{0, 1});
  CHECK(chebyshev_T(2) == std::vector<Integer>{-2, 0, 1});
  CHECK(chebyshev_T(3) == std::vector<Integer>{0, -3, 0, 1});
  CHECK(chebyshev_S(2) == std::vector<Integer>{-1, 0, 1});
}

TEST_CASE("cosine identity T_n(X + 1/X) = X^n + X^-n") {
  for (unsigned n = 0; n <= 25; ++n) {
    CHECK(evaluate(chebyshev_T(n), kX) == LaurentPoly({{int(n), 1}, {-int(n), 1}}));
    // S_n(X + 1/X) (X - 1/X) = X^{n+1} - X^{-n-1}
    const LaurentPoly s = evaluate(chebyshev_S(n), kX) * LaurentPoly({{1, 1}, {-1, -1}});
    CHECK(s == LaurentPoly({{int(n) + 1, 1}, {-int(n) - 1, -1}}));
  }
}

TEST_CASE("T_m o T_n = T_mn") {
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n <= 6; ++n) CHECK(compose(chebyshev_T(m), chebyshev_T(n)) == chebyshev_T(m * n));
}

TEST_CASE("canonical slopes and threading conventions") {
  CHECK(canonicalize(-2, 3) == PQ{2, -3});
  CHECK(canonicalize(0, -4) == PQ{0, 4});
  CHECK(gcd_of({6, -4}) == 2);
  CHECK(gcd_of({0, 0}) == 0);
  CHECK(chebyshev_element(-3, -1) == chebyshev_element(3, 1));
  CHECK(chebyshev_element(0, 0) == scalar_element(2));
  CHECK(chebyshev_prime_element(0, 0) == scalar_element(1));
  CHECK(to_string(chebyshev_element(2, 0)) == "T(2,0)");
  CHECK(to_string(to_multicurve(chebyshev_element(2, 0))) == "(2,0) - 2");
  CHECK(to_string(to_multicurve(chebyshev_element(4, 2))) == "(4,2) - 2");
}

TEST_CASE("eta is d + A^2 + A^-2") {
  const auto eta = chebyshev_prime_element(0, 0, 1);
  MulticurveElement expect = multicurve_element(0, 0, 1);
  expect.add_term({0, {0, 0}}, LaurentPoly({{2, 1}, {-2, 1}}));
  CHECK(to_multicurve(eta) == expect);
  CHECK(closed_torus_reduction(to_multicurve(eta)).is_zero());
  CHECK(eta_multiply(chebyshev_element(1, 2), 3) == chebyshev_element(1, 2, 3));
}

TEST_CASE("basis change round trips") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto x = testing_support::random_element(rng, 5, 6, 3);
    const auto m = to_multicurve(x);
    CHECK(from_multicurve(m) == x);
    CHECK(to_multicurve(from_multicurve(m)) == m);
    CHECK(to_multicurve(x + x) == m + m);
    CHECK(to_multicurve(x.conjugated()) == m.conjugated());
  }
}

TEST_CASE("text and json round trips") {
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto x = testing_support::random_element(rng);
    CHECK(skein_from_json(nlohmann::json::parse(to_json(x).dump())) == x);
    const auto m = to_multicurve(x);
    CHECK(multicurve_from_json(nlohmann::json::parse(to_json(m).dump())) == m);
  }
  CHECK(to_string(SkeinElement{}) == "0");
  CHECK_THROWS(skein_from_json(nlohmann::json::parse(R"([{"p":1}])")));
}

TEST_CASE("S threading rendering") {
  // T(2,0) = S(2,0) - S(0,0)
  CHECK(to_s_basis(chebyshev_element(2, 0)).to_string() == "S(2,0) - 1");
}

TEST_CASE("intersection numbers") {
  CHECK(intersection_number({0, {2, 1}}, {0, {0, 1}}) == 2);
  CHECK(intersection_number({0, {2, 1}}, {0, {-1, 3}}) == 7);
  CHECK(intersection_number({3, {0, 0}}, {0, {5, 1}}) == 0);
}

}
