#include "skeintorus/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace skeintorus {

namespace {

void check_exponent_range([[maybe_unused]] Exponent a, [[maybe_unused]] Exponent b) {
  assert(!((b > 0 && a > std::numeric_limits<Exponent>::max() - b) ||
           (b < 0 && a < std::numeric_limits<Exponent>::min() - b)) &&
         "Laurent exponent overflow");
}

// Exponent of the i-th rhs term in ascending order after the map e -> k +- e.
struct RhsCursor {
  const std::vector<LaurentPoly::Term>& rhs;
  Exponent k;
  bool conj;
  std::size_t size() const { return rhs.size(); }
  const LaurentPoly::Term& at(std::size_t i) const {
    return conj ? rhs[rhs.size() - 1 - i] : rhs[i];
  }
  Exponent exponent(std::size_t i) const {
    const Exponent e = at(i).first;
    check_exponent_range(conj ? -e : e, k);
    return conj ? k - e : k + e;
  }
};

// lhs + c * cursor
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& lhs,
                                     const RhsCursor& rhs, const Integer& c) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && lhs[i].first < rhs.exponent(j))) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || rhs.exponent(j) < lhs[i].first) {
      out.emplace_back(rhs.exponent(j), rhs.at(j).second * c);
      ++j;
    } else {
      Integer sum = lhs[i].second + rhs.at(j).second * c;
      if (!sum.is_zero()) out.emplace_back(lhs[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

// lhs += c * cursor without reallocating when every rhs exponent is present.
bool add_in_place(std::vector<LaurentPoly::Term>& lhs, const RhsCursor& rhs, const Integer& c) {
  if (rhs.size() > lhs.size()) return false;
  std::size_t i = 0;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    const Exponent e = rhs.exponent(j);
    while (i < lhs.size() && lhs[i].first < e) ++i;
    if (i == lhs.size() || lhs[i].first != e) return false;
  }
  bool zeroed = false;
  i = 0;
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    const Exponent e = rhs.exponent(j);
    while (lhs[i].first < e) ++i;
    Integer& target = lhs[i].second;
    if (c == 1) {
      target += rhs.at(j).second;
    } else if (c == -1) {
      target -= rhs.at(j).second;
    } else {
      target += rhs.at(j).second * c;
    }
    zeroed = zeroed || target.is_zero();
  }
  if (zeroed) {
    std::erase_if(lhs, [](const LaurentPoly::Term& t) { return t.second.is_zero(); });
  }
  return true;
}

void append_power(std::ostringstream& os, const char* var, Exponent e, bool latex) {
  os << var;
  if (e == 1) return;
  if (latex) {
    os << "^{" << e << "}";
  } else {
    os << "^" << e;
  }
}

std::string render(const std::vector<LaurentPoly::Term>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c.sign() < 0 ? Integer(-c) : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << (latex ? " " : "*");
    append_power(os, "A", e, latex);
  }
  return os.str();
}

}  // namespace

LaurentPoly::LaurentPoly(int c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::monomial(Exponent e, Integer c) {
  LaurentPoly out;
  if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, -1);
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, Exponent k, const Integer& c,
                             bool conjugate_rhs) {
  if (rhs.is_zero() || c.is_zero()) return;
  const RhsCursor cursor{rhs.terms_, k, conjugate_rhs};
  if (&rhs != this && add_in_place(terms_, cursor, c)) return;
  terms_ = merge(terms_, cursor, c);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) {
    check_exponent_range(t.first, k);
    t.first += k;
  }
  return out;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out.terms_.emplace_back(-it->first, it->second);
  }
  return out;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.sign() > 0; });
}

std::string LaurentPoly::to_string() const { return render(terms_, false); }

std::string LaurentPoly::to_latex() const { return render(terms_, true); }

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) out.push_back({e, c.str()});
  return out;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_string()) {
      throw std::invalid_argument("Laurent term must be [exponent, \"coefficient\"]");
    }
    const auto& digits = entry[1].get_ref<const std::string&>();
    std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    if (digits.size() == start ||
        !std::all_of(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw std::invalid_argument("bad Laurent coefficient: " + digits);
    }
    terms.emplace_back(entry[0].get<Exponent>(), Integer(digits));
  }
  LaurentPoly out = from_terms(terms);
  if (out.size() != terms.size()) {
    throw std::invalid_argument("Laurent JSON is not canonical (repeated or zero terms)");
  }
  return out;
}

LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }

LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.size() == 1 && x.terms().front().second == 1) return y.shifted(x.terms().front().first);
  if (y.size() == 1 && y.terms().front().second == 1) return x.shifted(y.terms().front().first);
  const Exponent lo = x.min_exponent() + y.min_exponent();
  const Exponent hi = x.max_exponent() + y.max_exponent();
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<LaurentPoly::Term> out;
  if (span <= 4 * x.size() * y.size() + 64) {
    std::vector<Integer> dense(span);
    for (const auto& [ex, cx] : x.terms()) {
      for (const auto& [ey, cy] : y.terms()) dense[ex + ey - lo] += cx * cy;
    }
    for (std::uint64_t i = 0; i < span; ++i) {
      if (!dense[i].is_zero()) out.emplace_back(lo + static_cast<Exponent>(i), std::move(dense[i]));
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  out.reserve(x.size() * y.size());
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) out.emplace_back(ex + ey, cx * cy);
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly pow(const LaurentPoly& x, unsigned n) {
  LaurentPoly result = 1;
  LaurentPoly base = x;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly quantum_int(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("quantum_int requires k >= 0");
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t e = -2 * (k - 1); e <= 2 * (k - 1); e += 4) terms.emplace_back(e, 1);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly loop_value() { return {{2, -1}, {-2, -1}}; }

}  // namespace skeintorus
