#include "skeintorus/closedforms.hpp"

#include <stdexcept>

namespace skeintorus::closedforms {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// sum_{k=0}^{p/2} A^{sign (p-2k)} [k] T'(p-2k, slope (p-2k))
SkeinElement q1_family(std::int64_t p, int sign, std::int64_t slope) {
  SkeinElement out;
  for (std::int64_t k = 0; 2 * k <= p; ++k) {
    const std::int64_t a = p - 2 * k;
    out += chebyshev_prime_element(a, slope * a, 0, quantum_int(k).shifted(sign * a));
  }
  return out;
}

}  // namespace

SkeinElement d_q1(std::int64_t p) {
  require(p >= 1, "d_q1 needs p >= 1");
  return q1_family(p, -1, 0);
}

SkeinElement d_q_p_plus_1(std::int64_t p) {
  require(p >= 1, "d_q_p_plus_1 needs p >= 1");
  return q1_family(p, -1, 1);
}

SkeinElement d_q_p_minus_1(std::int64_t p) {
  require(p >= 1, "d_q_p_minus_1 needs p >= 1");
  return q1_family(p, 1, 1);
}

SkeinElement d_q_minus_1(std::int64_t p) {
  require(p >= 1, "d_q_minus_1 needs p >= 1");
  return q1_family(p, 1, 0);
}

SkeinElement d_p0_s2(std::int64_t p) {
  require(p >= 1, "d_p0_s2 needs p >= 1");
  SkeinElement out;
  for (std::int64_t k = 0; 2 * k <= p; ++k) {
    out += chebyshev_prime_element(p - 2 * k, 0, 0, quantum_int(2 * k));
  }
  return out;
}

SkeinElement d_q2(std::int64_t p) {
  require(p >= 2, "d_q2 needs p >= 2");
  if (p == 2) return {};
  if (p == 3) return chebyshev_element(1, 1, 0, LaurentPoly::monomial(1));
  SkeinElement out;
  for (std::int64_t k = 1; k <= p / 3; ++k) {
    out += chebyshev_element(p - 2 * k, 1, 0, quantum_int(k).shifted(-(p - 4 * k)));
  }
  if (p % 2 == 0) {
    for (std::int64_t k = 1; k <= (p - 1) / 6; ++k) {
      out += chebyshev_element(2 * k, 1, 0, quantum_int(2 * k).shifted(2 * k));
    }
  } else {
    for (std::int64_t k = 1; k <= (p + 1) / 6; ++k) {
      out += chebyshev_element(2 * k - 1, 1, 0, quantum_int(2 * k - 1).shifted(2 * k - 1));
    }
  }
  return out;
}

SkeinElement d_2q_q(std::int64_t q) {
  require(q >= 1, "d_2q_q needs q >= 1");
  SkeinElement out;
  for (std::int64_t k = 1; 2 * k <= q + 1; ++k) {
    const std::int64_t m = q - 2 * k + 1;
    out += chebyshev_prime_element(2 * m, m, 0, quantum_int(2 * k - 1));
  }
  return out;
}

SkeinElement d_1_0_p_3(std::int64_t p) {
  require(p >= 0, "d_1_0_p_3 needs p >= 0");
  switch (p % 3) {
    case 1:
      return chebyshev_element((p - 1) / 3, 1, 0, LaurentPoly::monomial(-1));
    case 2:
      return chebyshev_element((p + 1) / 3, 1, 0, LaurentPoly::monomial(1));
    default:
      return {};
  }
}

SkeinElement d_1_0_k_2_times_T01(std::int64_t k) {
  if (k % 2 == 0) return {};
  return chebyshev_element(0, 1);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFlag:
      return "FLAG";
    case Status::kFail:
      return "FAIL";
  }
  return "?";
}

FamilyResult check_family(const std::string& name, std::int64_t lo, std::int64_t hi,
                          const std::function<SkeinElement(std::int64_t)>& formula,
                          const std::function<SkeinElement(std::int64_t)>& engine,
                          bool flag_only) {
  FamilyResult r;
  r.name = name;
  r.lo = lo;
  r.hi = hi;
  for (std::int64_t n = lo; n <= hi; ++n) {
    SkeinElement expected = formula(n);
    SkeinElement actual = engine(n);
    if (expected != actual) {
      r.status = flag_only ? Status::kFlag : Status::kFail;
      r.first_mismatch = n;
      r.closed_form = std::move(expected);
      r.engine = std::move(actual);
      break;
    }
  }
  return r;
}

std::vector<FamilyResult> run_suite(const SuiteRanges& ranges, MemoTable& table) {
  auto disc = [&table](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return discrepancy(p, q, r, s, table);
  };
  std::vector<FamilyResult> out;
  out.push_back(check_family("D(p,1;0,1)", 1, ranges.q1_max, d_q1,
                             [&](std::int64_t p) { return disc(p, 1, 0, 1); }));
  out.push_back(check_family("D(p,p+1;0,1)", 1, ranges.variants_max, d_q_p_plus_1,
                             [&](std::int64_t p) { return disc(p, p + 1, 0, 1); }));
  out.push_back(check_family("D(p,p-1;0,1)", 1, ranges.variants_max, d_q_p_minus_1,
                             [&](std::int64_t p) { return disc(p, p - 1, 0, 1); }));
  out.push_back(check_family("D(p,-1;0,1)", 1, ranges.variants_max, d_q_minus_1,
                             [&](std::int64_t p) { return disc(p, -1, 0, 1); }));
  out.push_back(check_family("D(p,0;0,2)", 1, ranges.p0_s2_max, d_p0_s2,
                             [&](std::int64_t p) { return disc(p, 0, 0, 2); }));
  out.push_back(check_family("D(2q,q;0,1)", 1, ranges.p_2q_max, d_2q_q,
                             [&](std::int64_t q) { return disc(2 * q, q, 0, 1); }));
  out.push_back(check_family("D(1,0;p,3)", 0, ranges.d10_max, d_1_0_p_3,
                             [&](std::int64_t p) { return disc(1, 0, p, 3); }));
  out.push_back(check_family(
      "D(1,0;k,2)*T(0,1)", 0, ranges.d10_max, d_1_0_k_2_times_T01, [&](std::int64_t k) {
        return multiply(disc(1, 0, k, 2), chebyshev_element(0, 1), table);
      }));
  out.push_back(check_family("D(p,2;0,1)", 2, ranges.q2_max, d_q2,
                             [&](std::int64_t p) { return disc(p, 2, 0, 1); }, true));
  return out;
}

}  // namespace skeintorus::closedforms
