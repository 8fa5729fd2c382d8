#include "skeintorus/mapping.hpp"

#include <stdexcept>
#include <tuple>

namespace skeintorus {

namespace {

// Returns (g, x, y) with x*a + y*b = g = gcd(a,b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a,
                                                                  std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - quot * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - quot * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class KeyMap>
SkeinElement map_keys(const SkeinElement& x, KeyMap&& f, bool conjugate) {
  SkeinElement out;
  for (const auto& [key, coeff] : x.terms()) {
    const PQ image = f(key.curve);
    out.add_term({key.eta_pow, canonicalize(image.p, image.q)},
                 conjugate ? coeff.conjugate() : coeff);
  }
  return out;
}

}  // namespace

MappingClass::MappingClass(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw std::invalid_argument("mapping class must have determinant 1");
}

MappingClass MappingClass::power(std::int64_t n) const {
  MappingClass base = n < 0 ? inverse() : *this;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  MappingClass out = identity();
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

MappingClass operator*(const MappingClass& x, const MappingClass& y) {
  // [[xa xc][xb xd]] * [[ya yc][yb yd]]
  return {x.a_ * y.a_ + x.c_ * y.b_, x.b_ * y.a_ + x.d_ * y.b_, x.a_ * y.c_ + x.c_ * y.d_,
          x.b_ * y.c_ + x.d_ * y.d_};
}

PQ act_on_pq(const MappingClass& phi, PQ v) {
  const auto [p, q] = phi.apply(v.p, v.q);
  return canonicalize(p, q);
}

SkeinElement act_on_skein(const MappingClass& phi, const SkeinElement& x) {
  return map_keys(x, [&](PQ c) { return act_on_pq(phi, c); }, false);
}

PairReduction reduce_pair(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  if (r == 0 && s == 0) throw std::invalid_argument("reduce_pair: (r,s) = (0,0)");
  const std::int64_t det = p * s - r * q;
  if (det == 0) throw std::invalid_argument("reduce_pair: parallel slopes");
  PairReduction out;
  if (det < 0) {
    out.sign = -1;
    p = -p;
    q = -q;
  }
  const auto [g, x, y] = extended_gcd(r, s);
  // Rows (s/g, -r/g) and (x, y): sends (r,s) to (0,g).
  const MappingClass euclid(s / g, x, -r / g, y);
  const auto [p1, q0] = euclid.apply(p, q);
  const std::int64_t t = -floor_div(q0, p1);
  out.phi = MappingClass::twist().power(t) * euclid;
  out.p1 = p1;
  out.q1 = q0 + t * p1;
  out.s1 = g;
  return out;
}

SkeinElement tw(const SkeinElement& x) { return tw_pow(x, 1); }

SkeinElement tw_inv(const SkeinElement& x) { return tw_pow(x, -1); }

SkeinElement tw_pow(const SkeinElement& x, std::int64_t n) {
  if (n == 0) return x;
  return map_keys(x, [n](PQ c) { return PQ{c.p, c.q + n * c.p}; }, false);
}

SkeinElement opp(const SkeinElement& x) {
  return map_keys(x, [](PQ c) { return PQ{c.p, c.p - c.q}; }, true);
}

SkeinElement rev(const SkeinElement& x) {
  return map_keys(x, [](PQ c) { return PQ{c.q, c.p}; }, false);
}

}  // namespace skeintorus
