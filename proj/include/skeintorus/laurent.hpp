#pragma once

// Exact Laurent polynomials in one variable A with arbitrary-precision
// integer coefficients.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace skeintorus {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

/// Sparse Laurent polynomial sum_e c_e A^e over Z.
///
/// Terms are kept sorted by exponent with no zero coefficient stored, so
/// structural equality is equality of polynomials.
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<Term> terms);

  /// c * A^e
  static LaurentPoly monomial(Exponent e, Integer c = 1);
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(Exponent e) const;
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  /// Multiplies by A^k.
  LaurentPoly shifted(Exponent k) const;
  /// A <-> A^{-1}
  LaurentPoly conjugate() const;
  /// Adds c * A^k * rhs in place (c * A^k * conj(rhs) if conjugate_rhs).
  void add_scaled(const LaurentPoly& rhs, Exponent k, const Integer& c = 1,
                  bool conjugate_rhs = false);

  bool all_coefficients_nonnegative() const;

  /// Descending exponents, e.g. "A^2 + 2 + A^-2".
  std::string to_string() const;
  std::string to_latex() const;
  /// [[exponent, "coefficient"], ...] ascending.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y);
LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y);
LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly pow(const LaurentPoly& x, unsigned n);

/// Quantum integer [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}); [0] = 0.
/// Throws std::invalid_argument for k < 0.
LaurentPoly quantum_int(std::int64_t k);

/// The loop value -A^2 - A^{-2}.
LaurentPoly loop_value();

}  // namespace skeintorus
