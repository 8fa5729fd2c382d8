#pragma once

#include <cstdint>
#include <random>

#include "skeintorus/skein.hpp"

namespace testing_support {

using namespace skeintorus;

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int max_exp = 6,
                               int max_coeff = 9) {
  std::uniform_int_distribution<int> n(0, max_terms);
  std::uniform_int_distribution<int> e(-max_exp, max_exp);
  std::uniform_int_distribution<int> c(-max_coeff, max_coeff);
  std::vector<LaurentPoly::Term> terms;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) terms.emplace_back(e(rng), Integer(c(rng)));
  return LaurentPoly::from_terms(std::move(terms));
}

inline SkeinElement random_element(std::mt19937& rng, int max_terms = 4, int box = 4,
                                   int max_eta = 2) {
  std::uniform_int_distribution<int> n(1, max_terms);
  std::uniform_int_distribution<int> v(-box, box);
  std::uniform_int_distribution<int> k(0, max_eta);
  SkeinElement x;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) {
    const PQ c = canonicalize(v(rng), v(rng));
    x.add_term({static_cast<std::uint32_t>(k(rng)), c}, random_poly(rng, 3, 4, 5));
  }
  return x;
}

}  // namespace testing_support
