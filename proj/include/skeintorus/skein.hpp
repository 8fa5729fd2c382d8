#pragma once

// Skein elements of the one-holed torus in the Chebyshev basis
// { eta^k T(p,q) } and in the multicurve basis { d^k (p,q) }, plus the
// change of basis between them.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skeintorus/laurent.hpp"

namespace skeintorus {

/// Slope vector of a torus link; (p,q) and (-p,-q) are the same link.
struct PQ {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool is_empty() const { return p == 0 && q == 0; }
  bool is_canonical() const { return p > 0 || (p == 0 && q >= 0); }
  friend auto operator<=>(const PQ&, const PQ&) = default;
};

/// Representative with p > 0, or p == 0 and q >= 0.
PQ canonicalize(std::int64_t p, std::int64_t q);

/// gcd(|p|,|q|); 0 for (0,0).
std::int64_t gcd_of(PQ v);

/// Index eta^k T(p,q) of the Chebyshev basis. The curve (0,0) stands for
/// eta^k times the empty link, never for T(0,0) = 2 (empty link).
struct BasisKey {
  std::uint32_t eta_pow = 0;
  PQ curve;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Index d^k (p,q) of the multicurve basis (d the peripheral loop).
struct MulticurveKey {
  std::uint32_t boundary_pow = 0;
  PQ curve;
  friend auto operator<=>(const MulticurveKey&, const MulticurveKey&) = default;
};

/// Finite Z[A,A^-1]-linear combination of basis keys; never stores a zero
/// coefficient.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, LaurentPoly>;

  LinearCombination() = default;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  /// Adds c * A^shift * coeff (or its conjugate) to the coefficient of key.
  void add_term(const Key& key, const LaurentPoly& coeff, Exponent shift = 0,
                const Integer& c = 1, bool conjugate = false) {
    if (coeff.is_zero() || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key);
    it->second.add_scaled(coeff, shift, c, conjugate);
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// this += c * A^shift * other
  void add_scaled(const LinearCombination& other, Exponent shift = 0, const Integer& c = 1) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff, shift, c);
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    add_scaled(rhs);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    add_scaled(rhs, 0, -1);
    return *this;
  }
  LinearCombination operator-() const {
    LinearCombination out;
    out.add_scaled(*this, 0, -1);
    return out;
  }
  friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) {
    return x += y;
  }
  friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) {
    return x -= y;
  }

  /// Multiplies every coefficient by the scalar c.
  LinearCombination scaled(const LaurentPoly& c) const {
    LinearCombination out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
  }

  LinearCombination conjugated() const {
    LinearCombination out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff.conjugate());
    return out;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Map terms_;
};

using SkeinElement = LinearCombination<BasisKey>;
using MulticurveElement = LinearCombination<MulticurveKey>;

/// c * eta^k * T(p,q), applying T(0,0) = 2 (empty link).
SkeinElement chebyshev_element(std::int64_t p, std::int64_t q, std::uint32_t eta_pow = 0,
                               const LaurentPoly& c = 1);
/// c * eta^k * T'(p,q), where T'(0,0) is the empty link.
SkeinElement chebyshev_prime_element(std::int64_t p, std::int64_t q, std::uint32_t eta_pow = 0,
                                     const LaurentPoly& c = 1);
/// c * (empty link)
SkeinElement scalar_element(const LaurentPoly& c);
/// c * d^k * (p,q)
MulticurveElement multicurve_element(std::int64_t p, std::int64_t q,
                                     std::uint32_t boundary_pow = 0, const LaurentPoly& c = 1);

/// Multiplies by the central element eta (eta_pow += n on every key).
SkeinElement eta_multiply(const SkeinElement& x, std::uint32_t n = 1);

// Chebyshev polynomials as power-basis coefficient lists, constant term first.
std::vector<Integer> chebyshev_T(std::uint32_t n);
std::vector<Integer> chebyshev_T_prime(std::uint32_t n);
std::vector<Integer> chebyshev_S(std::uint32_t n);

MulticurveElement to_multicurve(const SkeinElement& x);
SkeinElement from_multicurve(const MulticurveElement& x);

/// The same element written in the second-kind threading eta^k S(p,q);
/// keys are reused with S in place of T. Rendering only.
struct SThreadedElement {
  SkeinElement terms;
  std::string to_string() const;
};
SThreadedElement to_s_basis(const SkeinElement& x);

/// Geometric intersection number |ps - rq|; boundary copies contribute 0.
std::int64_t intersection_number(const MulticurveKey& m, const MulticurveKey& m2);

/// Substitutes d -> -A^2 - A^-2, i.e. maps to the closed torus.
MulticurveElement closed_torus_reduction(const MulticurveElement& x);

std::string to_string(const SkeinElement& x);
std::string to_string(const MulticurveElement& x);
std::string to_latex(const SkeinElement& x);
std::string to_latex(const MulticurveElement& x);
nlohmann::json to_json(const SkeinElement& x);
nlohmann::json to_json(const MulticurveElement& x);
SkeinElement skein_from_json(const nlohmann::json& j);
MulticurveElement multicurve_from_json(const nlohmann::json& j);

}  // namespace skeintorus
