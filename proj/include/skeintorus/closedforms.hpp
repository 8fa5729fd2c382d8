#pragma once

// Closed-form discrepancies for small families, written directly as sums of
// T' threadings with quantum-integer coefficients. Independent of the
// recursion engine; used to cross-check it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skeintorus/discrepancy.hpp"

namespace skeintorus::closedforms {

/// D(p,1;0,1) = sum_{k=0}^{p/2} A^{-(p-2k)} [k] T'(p-2k,0), p >= 1.
SkeinElement d_q1(std::int64_t p);
/// D(p,p+1;0,1), D(p,p-1;0,1), D(p,-1;0,1) for p >= 1.
SkeinElement d_q_p_plus_1(std::int64_t p);
SkeinElement d_q_p_minus_1(std::int64_t p);
SkeinElement d_q_minus_1(std::int64_t p);
/// D(p,0;0,2) = sum_{k=0}^{p/2} [2k] T'(p-2k,0), p >= 1.
SkeinElement d_p0_s2(std::int64_t p);
/// D(p,2;0,1) for p >= 2, with the summation limits exactly as published.
SkeinElement d_q2(std::int64_t p);
/// D(2q,q;0,1) = sum_{k=1}^{(q+1)/2} [2k-1] T'(2(q-2k+1), q-2k+1), q >= 1.
SkeinElement d_2q_q(std::int64_t q);
/// D(1,0;p,3) by residue of p mod 3, p >= 0.
SkeinElement d_1_0_p_3(std::int64_t p);
/// D(1,0;k,2) * T(0,1): 0 for even k, T(0,1) for odd k.
SkeinElement d_1_0_k_2_times_T01(std::int64_t k);

enum class Status { kPass, kFlag, kFail };
std::string to_string(Status s);

struct FamilyResult {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  Status status = Status::kPass;
  // first argument where the closed form and the engine differ
  std::optional<std::int64_t> first_mismatch;
  SkeinElement closed_form;
  SkeinElement engine;
};

/// Compares formula(n) against engine(n) for lo <= n <= hi. A mismatch is
/// kFlag when flag_only, kFail otherwise.
FamilyResult check_family(const std::string& name, std::int64_t lo, std::int64_t hi,
                          const std::function<SkeinElement(std::int64_t)>& formula,
                          const std::function<SkeinElement(std::int64_t)>& engine,
                          bool flag_only = false);

struct SuiteRanges {
  std::int64_t q1_max = 60;
  std::int64_t q2_max = 60;
  std::int64_t p_2q_max = 30;
  std::int64_t p0_s2_max = 40;
  std::int64_t variants_max = 60;
  std::int64_t d10_max = 30;
};

/// Every closed form against the engine. Only d_q2 may FLAG.
std::vector<FamilyResult> run_suite(const SuiteRanges& ranges, MemoTable& table);

}  // namespace skeintorus::closedforms
