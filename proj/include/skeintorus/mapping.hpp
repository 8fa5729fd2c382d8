#pragma once

// SL(2,Z) action of the mapping class group on slopes and skein elements,
// and the twist / opposition / reverse symmetries of the Chebyshev basis.

#include <cstdint>

#include "skeintorus/skein.hpp"

namespace skeintorus {

/// Matrix [[a, c], [b, d]] with columns (a,b) and (c,d); ad - bc = 1.
class MappingClass {
 public:
  /// Throws std::invalid_argument unless ad - bc = 1.
  MappingClass(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static MappingClass identity() { return {1, 0, 0, 1}; }
  /// (p,q) -> (p, p+q)
  static MappingClass twist() { return {1, 1, 0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  /// Raw matrix-vector product, no canonicalization.
  std::pair<std::int64_t, std::int64_t> apply(std::int64_t p, std::int64_t q) const {
    return {a_ * p + c_ * q, b_ * p + d_ * q};
  }
  /// Adjugate.
  MappingClass inverse() const { return {d_, -b_, -c_, a_}; }
  MappingClass power(std::int64_t n) const;

  friend MappingClass operator*(const MappingClass& x, const MappingClass& y);
  friend bool operator==(const MappingClass&, const MappingClass&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

PQ act_on_pq(const MappingClass& phi, PQ v);
SkeinElement act_on_skein(const MappingClass& phi, const SkeinElement& x);

/// phi with phi(r,s) = (0, s1) and phi(sign*(p,q)) = (p1, q1), 0 <= q1 < p1.
/// sign is -1 when (p,q) had to be negated to make ps - rq > 0.
struct PairReduction {
  MappingClass phi = MappingClass::identity();
  std::int64_t sign = 1;
  std::int64_t p1 = 0;
  std::int64_t q1 = 0;
  std::int64_t s1 = 0;
};

/// Extended Euclid followed by a twist power. Requires |ps - rq| >= 1 and
/// throws std::invalid_argument if (r,s) = (0,0) or the determinant is 0.
PairReduction reduce_pair(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

SkeinElement tw(const SkeinElement& x);
SkeinElement tw_inv(const SkeinElement& x);
/// tw^n for any integer n.
SkeinElement tw_pow(const SkeinElement& x, std::int64_t n);
SkeinElement opp(const SkeinElement& x);
SkeinElement rev(const SkeinElement& x);

}  // namespace skeintorus
