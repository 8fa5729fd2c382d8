#pragma once

// The discrepancy D(p,q;r,s), defined by
//
//   T(p,q) * T(r,s) = A^det T(p+r,q+s) + A^-det T(p-r,q-s) + eta * D(p,q;r,s),
//   det = ps - rq,
//
// computed from a memo table of normalized values D(p,q;0,s) (p > 0,
// 0 <= q <= p/2, s >= 1) that is filled by the five-term recursion obtained
// from associativity. Everything else is reached through the mapping class
// group and the twist / opposition / reverse symmetries.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "skeintorus/mapping.hpp"
#include "skeintorus/skein.hpp"

namespace skeintorus {

struct DiscrepancyKey {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;

  /// r = 0, p > 0, 0 <= q <= p/2, s >= 1.
  bool is_normalized() const { return r == 0 && p > 0 && q >= 0 && 2 * q <= p && s >= 1; }
  friend auto operator<=>(const DiscrepancyKey&, const DiscrepancyKey&) = default;
};

/// A recursion step needed a table entry that the fill order should have
/// produced first.
class MissingEntryError : public std::logic_error {
 public:
  explicit MissingEntryError(const DiscrepancyKey& key);
  const DiscrepancyKey& key() const { return key_; }

 private:
  DiscrepancyKey key_;
};

/// Insert-only store of normalized discrepancies.
class MemoTable {
 public:
  using Map = std::map<DiscrepancyKey, SkeinElement>;

  const SkeinElement* find(const DiscrepancyKey& key) const;
  /// Throws MissingEntryError.
  const SkeinElement& at(const DiscrepancyKey& key) const;
  bool contains(const DiscrepancyKey& key) const { return entries_.contains(key); }
  /// No-op if the key is present with the same value; std::logic_error if the
  /// value differs or the key is not normalized.
  void insert(const DiscrepancyKey& key, SkeinElement value);

  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }
  friend bool operator==(const MemoTable&, const MemoTable&) = default;

 private:
  Map entries_;
};

// Lookups of derived values from normalized entries (no insertion).

/// D(p,q;0,1) for any p, q, by twist reduction mod p and opposition.
SkeinElement lookup_s1(const MemoTable& table, std::int64_t p, std::int64_t q);
/// D(p,q;0,s) for any p, q and s >= 0.
SkeinElement lookup_s(const MemoTable& table, std::int64_t p, std::int64_t q, std::int64_t s);
/// D(1,0;m,n) = rev(tw^a(D(n,c;0,1))) with m = an + c, 0 <= c < n.
SkeinElement lookup_10(const MemoTable& table, std::int64_t m, std::int64_t n);

/// T(1,0) * x, expanded termwise.
SkeinElement multiply_by_T10(const SkeinElement& x, const MemoTable& table);
/// x * T(0,1), expanded termwise.
SkeinElement multiply_by_T01(const SkeinElement& x, const MemoTable& table);

/// D(p+1,q;0,1) from the five-term recursion in p.
SkeinElement recursion_step_p(std::int64_t p, std::int64_t q, const MemoTable& table);
/// D(p,q;0,s+1) from the recursion in s.
SkeinElement recursion_step_s(std::int64_t p, std::int64_t q, std::int64_t s,
                              const MemoTable& table);

/// Fills D(m,n;0,1) for 1 <= n <= q_max, row by row, m ascending up to p_max.
/// Entries already present are kept.
void fill_table_s1(MemoTable& table, std::int64_t p_max, std::int64_t q_max);
MemoTable fill_table_s1(std::int64_t p_max, std::int64_t q_max);
/// Adds D(p,q;0,m) for 2 <= m <= s_max. Needs D(p,i;0,1) for i <= p/2.
void fill_table_s(std::int64_t p, std::int64_t q, std::int64_t s_max, MemoTable& table);

/// D(p,q;r,s) for any integers. The table is used as a cache and extended.
SkeinElement discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                         MemoTable& table);
SkeinElement discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

/// Product of two Chebyshev basis elements; the empty link and eta are central.
SkeinElement multiply_basis(const BasisKey& x, const BasisKey& y, MemoTable& table);
SkeinElement multiply_basis(const BasisKey& x, const BasisKey& y);
/// x * y (x on top).
SkeinElement multiply(const SkeinElement& x, const SkeinElement& y, MemoTable& table);
SkeinElement multiply(const SkeinElement& x, const SkeinElement& y);

// Persistent cache.

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CacheIoError : public CacheError {
 public:
  using CacheError::CacheError;
};
class CacheVersionError : public CacheError {
 public:
  using CacheError::CacheError;
};
class CacheCorruptError : public CacheError {
 public:
  using CacheError::CacheError;
};

inline constexpr const char* kCacheHeader = "SKEINTORUS-CACHE v1";

void save_table(const MemoTable& table, const std::filesystem::path& path);
/// Validates every key and term bound, and recomputes the small entries.
MemoTable load_table(const std::filesystem::path& path);

/// Every key of D(p,q;0,1) lies in [0,p-2] x [0,q-1]. For s >= 2 the check is
/// 0 <= key.p <= p-2 and |key.q| <= q+s-2 (observed, used as a sanity check).
bool satisfies_term_bound(const DiscrepancyKey& key, const SkeinElement& value);
/// s = 1 only: the tighter [0,p-2] x [0,q-2]; reported, not enforced.
bool satisfies_tight_term_bound(const DiscrepancyKey& key, const SkeinElement& value);

}  // namespace skeintorus
