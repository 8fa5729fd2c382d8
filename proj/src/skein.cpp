#include "skeintorus/skein.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skeintorus {

PQ canonicalize(std::int64_t p, std::int64_t q) {
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

std::int64_t gcd_of(PQ v) { return std::gcd(v.p, v.q); }

SkeinElement chebyshev_element(std::int64_t p, std::int64_t q, std::uint32_t eta_pow,
                               const LaurentPoly& c) {
  SkeinElement out;
  const PQ curve = canonicalize(p, q);
  out.add_term({eta_pow, curve}, c, 0, curve.is_empty() ? 2 : 1);
  return out;
}

SkeinElement chebyshev_prime_element(std::int64_t p, std::int64_t q, std::uint32_t eta_pow,
                                     const LaurentPoly& c) {
  SkeinElement out;
  out.add_term({eta_pow, canonicalize(p, q)}, c);
  return out;
}

SkeinElement scalar_element(const LaurentPoly& c) {
  SkeinElement out;
  out.add_term({0, {0, 0}}, c);
  return out;
}

MulticurveElement multicurve_element(std::int64_t p, std::int64_t q, std::uint32_t boundary_pow,
                                     const LaurentPoly& c) {
  MulticurveElement out;
  out.add_term({boundary_pow, canonicalize(p, q)}, c);
  return out;
}

SkeinElement eta_multiply(const SkeinElement& x, std::uint32_t n) {
  SkeinElement out;
  for (const auto& [key, coeff] : x.terms()) out.add_term({key.eta_pow + n, key.curve}, coeff);
  return out;
}

namespace {

// Runs x*P_{k-1} - P_{k-2} from the given seeds.
std::vector<Integer> chebyshev_recurrence(std::uint32_t n, std::vector<Integer> p0,
                                          std::vector<Integer> p1) {
  if (n == 0) return p0;
  for (std::uint32_t k = 2; k <= n; ++k) {
    std::vector<Integer> next(k + 1);
    for (std::size_t i = 0; i < p1.size(); ++i) next[i + 1] += p1[i];
    for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= p0[i];
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer out = 1;
  for (std::uint32_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// x^n = sum_i result[i] * T'_i(x)
std::vector<Integer> power_in_t_prime(std::uint32_t n) {
  std::vector<std::vector<Integer>> expansions;
  for (std::uint32_t m = 0; m <= n; ++m) {
    std::vector<Integer> e(m + 1);
    e[m] = 1;
    const auto t = chebyshev_T_prime(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (t[i].is_zero()) continue;
      for (std::uint32_t j = 0; j <= i; ++j) e[j] -= t[i] * expansions[i][j];
    }
    expansions.push_back(std::move(e));
  }
  return expansions[n];
}

PQ cable(PQ primitive, std::int64_t i) { return {primitive.p * i, primitive.q * i}; }

std::string power_factor(const char* name, std::uint32_t k, bool latex) {
  if (k == 0) return {};
  std::string out = name;
  if (k > 1) out += latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  return out;
}

std::string curve_factor(PQ c, const char* letter, bool latex) {
  if (c.is_empty()) return {};
  std::ostringstream os;
  if (latex) {
    os << "\\binom{" << c.p << "}{" << c.q << "}";
    if (*letter != '\0') os << "_" << letter;
  } else {
    os << letter << "(" << c.p << "," << c.q << ")";
  }
  return os.str();
}

// Renders sum c_i * factors_i with the largest curves first.
struct RenderTerm {
  PQ curve;
  std::uint32_t power;
  const LaurentPoly* coeff;
  std::vector<std::string> factors;
};

std::string render_terms(std::vector<RenderTerm> terms, bool latex) {
  if (terms.empty()) return "0";
  std::stable_sort(terms.begin(), terms.end(), [](const RenderTerm& a, const RenderTerm& b) {
    if (a.curve != b.curve) return a.curve > b.curve;
    return a.power > b.power;
  });
  const char* join = latex ? " " : "*";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    bool negative = false;
    std::string coeff;
    if (t.coeff->size() == 1) {
      const auto& [e, c] = t.coeff->terms().front();
      negative = c.sign() < 0;
      LaurentPoly mag = LaurentPoly::monomial(e, negative ? Integer(-c) : c);
      if (!(e == 0 && mag == LaurentPoly(1))) coeff = latex ? mag.to_latex() : mag.to_string();
    } else {
      coeff = "(" + (latex ? t.coeff->to_latex() : t.coeff->to_string()) + ")";
    }
    std::vector<std::string> parts;
    if (!coeff.empty()) parts.push_back(coeff);
    for (const auto& f : t.factors) {
      if (!f.empty()) parts.push_back(f);
    }
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? join : "") + parts[i];
    if (body.empty()) body = "1";
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

std::string render_skein(const SkeinElement& x, const char* letter, bool latex) {
  std::vector<RenderTerm> terms;
  for (const auto& [key, coeff] : x.terms()) {
    terms.push_back({key.curve, key.eta_pow, &coeff,
                     {power_factor(latex ? "\\eta" : "eta", key.eta_pow, latex),
                      curve_factor(key.curve, letter, latex)}});
  }
  return render_terms(std::move(terms), latex);
}

std::string render_multicurve(const MulticurveElement& x, bool latex) {
  std::vector<RenderTerm> terms;
  for (const auto& [key, coeff] : x.terms()) {
    terms.push_back({key.curve, key.boundary_pow, &coeff,
                     {power_factor(latex ? "\\partial" : "d", key.boundary_pow, latex),
                      curve_factor(key.curve, "", latex)}});
  }
  return render_terms(std::move(terms), latex);
}

template <class Key>
Key key_from_json(const nlohmann::json& j, const char* power_field) {
  if (!j.is_object()) throw std::invalid_argument("skein term must be a JSON object");
  const auto k = j.at(power_field).get<std::int64_t>();
  const auto p = j.at("p").get<std::int64_t>();
  const auto q = j.at("q").get<std::int64_t>();
  if (k < 0) throw std::invalid_argument(std::string("negative ") + power_field);
  const PQ curve{p, q};
  if (!curve.is_canonical()) throw std::invalid_argument("non-canonical curve in JSON");
  return Key{static_cast<std::uint32_t>(k), curve};
}

template <class Element>
Element element_from_json(const nlohmann::json& j, const char* power_field) {
  if (!j.is_array()) throw std::invalid_argument("skein element JSON must be an array");
  Element out;
  for (const auto& term : j) {
    auto key = key_from_json<typename Element::Map::key_type>(term, power_field);
    auto coeff = LaurentPoly::from_json(term.at("coeff"));
    if (coeff.is_zero()) throw std::invalid_argument("zero coefficient in JSON");
    if (!out.coefficient(key).is_zero()) throw std::invalid_argument("repeated key in JSON");
    out.add_term(key, coeff);
  }
  return out;
}

}  // namespace

std::vector<Integer> chebyshev_T(std::uint32_t n) {
  return chebyshev_recurrence(n, {2}, {0, 1});
}

std::vector<Integer> chebyshev_T_prime(std::uint32_t n) {
  if (n == 0) return {1};
  return chebyshev_T(n);
}

std::vector<Integer> chebyshev_S(std::uint32_t n) {
  return chebyshev_recurrence(n, {1}, {0, 1});
}

MulticurveElement to_multicurve(const SkeinElement& x) {
  MulticurveElement out;
  const LaurentPoly two = quantum_int(2);
  for (const auto& [key, coeff] : x.terms()) {
    std::vector<std::pair<PQ, Integer>> curve_terms;
    const std::int64_t d = gcd_of(key.curve);
    if (d == 0) {
      curve_terms.emplace_back(PQ{0, 0}, 1);
    } else {
      const PQ primitive{key.curve.p / d, key.curve.q / d};
      const auto t = chebyshev_T(static_cast<std::uint32_t>(d));
      for (std::int64_t i = 0; i <= d; ++i) {
        if (!t[i].is_zero()) curve_terms.emplace_back(cable(primitive, i), t[i]);
      }
    }
    // eta^k = sum_j C(k,j) [2]^(k-j) d^j
    for (std::uint32_t j = 0; j <= key.eta_pow; ++j) {
      const LaurentPoly eta_part = pow(two, key.eta_pow - j) * coeff;
      const Integer b = binomial(key.eta_pow, j);
      for (const auto& [curve, t] : curve_terms) out.add_term({j, curve}, eta_part, 0, b * t);
    }
  }
  return out;
}

SkeinElement from_multicurve(const MulticurveElement& x) {
  SkeinElement out;
  const LaurentPoly minus_two = -quantum_int(2);
  for (const auto& [key, coeff] : x.terms()) {
    std::vector<std::pair<PQ, Integer>> curve_terms;
    const std::int64_t d = gcd_of(key.curve);
    if (d == 0) {
      curve_terms.emplace_back(PQ{0, 0}, 1);
    } else {
      const PQ primitive{key.curve.p / d, key.curve.q / d};
      const auto e = power_in_t_prime(static_cast<std::uint32_t>(d));
      for (std::int64_t i = 0; i <= d; ++i) {
        if (!e[i].is_zero()) curve_terms.emplace_back(cable(primitive, i), e[i]);
      }
    }
    // d^j = (eta - [2])^j
    for (std::uint32_t i = 0; i <= key.boundary_pow; ++i) {
      const LaurentPoly eta_part = pow(minus_two, key.boundary_pow - i) * coeff;
      const Integer b = binomial(key.boundary_pow, i);
      for (const auto& [curve, t] : curve_terms) out.add_term({i, curve}, eta_part, 0, b * t);
    }
  }
  return out;
}

std::string SThreadedElement::to_string() const { return render_skein(terms, "S", false); }

SThreadedElement to_s_basis(const SkeinElement& x) {
  // T'_0 = S_0, T'_1 = S_1, T'_n = S_n - S_{n-2}.
  SThreadedElement out;
  for (const auto& [key, coeff] : x.terms()) {
    out.terms.add_term(key, coeff);
    const std::int64_t d = gcd_of(key.curve);
    if (d >= 2) {
      const PQ lower{key.curve.p / d * (d - 2), key.curve.q / d * (d - 2)};
      out.terms.add_term({key.eta_pow, lower}, coeff, 0, -1);
    }
  }
  return out;
}

std::int64_t intersection_number(const MulticurveKey& m, const MulticurveKey& m2) {
  const std::int64_t det = m.curve.p * m2.curve.q - m2.curve.p * m.curve.q;
  return det < 0 ? -det : det;
}

MulticurveElement closed_torus_reduction(const MulticurveElement& x) {
  MulticurveElement out;
  const LaurentPoly loop = loop_value();
  for (const auto& [key, coeff] : x.terms()) {
    out.add_term({0, key.curve}, pow(loop, key.boundary_pow) * coeff);
  }
  return out;
}

std::string to_string(const SkeinElement& x) { return render_skein(x, "T", false); }
std::string to_string(const MulticurveElement& x) { return render_multicurve(x, false); }
std::string to_latex(const SkeinElement& x) { return render_skein(x, "T", true); }
std::string to_latex(const MulticurveElement& x) { return render_multicurve(x, true); }

nlohmann::json to_json(const SkeinElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, coeff] : x.terms()) {
    out.push_back({{"eta", key.eta_pow},
                   {"p", key.curve.p},
                   {"q", key.curve.q},
                   {"coeff", coeff.to_json()}});
  }
  return out;
}

nlohmann::json to_json(const MulticurveElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, coeff] : x.terms()) {
    out.push_back({{"boundary", key.boundary_pow},
                   {"p", key.curve.p},
                   {"q", key.curve.q},
                   {"coeff", coeff.to_json()}});
  }
  return out;
}

SkeinElement skein_from_json(const nlohmann::json& j) {
  return element_from_json<SkeinElement>(j, "eta");
}

MulticurveElement multicurve_from_json(const nlohmann::json& j) {
  return element_from_json<MulticurveElement>(j, "boundary");
}

}  // namespace skeintorus
