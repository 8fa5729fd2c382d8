#include "skeintorus/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace skeintorus {

namespace {

std::string key_string(const DiscrepancyKey& k) {
  std::ostringstream os;
  os << "D(" << k.p << "," << k.q << ";" << k.r << "," << k.s << ")";
  return os.str();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// out += c * A^shift * coeff * eta^k * T(p,q), with T(0,0) = 2 (empty link).
void add_chebyshev(SkeinElement& out, std::uint32_t k, std::int64_t p, std::int64_t q,
                   const LaurentPoly& coeff, Exponent shift, const Integer& c = 1) {
  const PQ curve = canonicalize(p, q);
  out.add_term({k, curve}, coeff, shift, curve.is_empty() ? Integer(2 * c) : c);
}

// out += c * eta^k * d
void add_eta_scaled(SkeinElement& out, const SkeinElement& d, std::uint32_t k,
                    const LaurentPoly& c) {
  for (const auto& [key, coeff] : d.terms()) {
    out.add_term({key.eta_pow + k, key.curve}, coeff * c);
  }
}

}  // namespace

MissingEntryError::MissingEntryError(const DiscrepancyKey& key)
    : std::logic_error("memo table has no entry " + key_string(key)), key_(key) {}

const SkeinElement* MemoTable::find(const DiscrepancyKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const SkeinElement& MemoTable::at(const DiscrepancyKey& key) const {
  if (const auto* v = find(key)) return *v;
  throw MissingEntryError(key);
}

void MemoTable::insert(const DiscrepancyKey& key, SkeinElement value) {
  if (!key.is_normalized()) {
    throw std::logic_error("memo key is not normalized: " + key_string(key));
  }
  auto [it, inserted] = entries_.try_emplace(key, std::move(value));
  if (!inserted && it->second != value) {
    throw std::logic_error("conflicting memo entry for " + key_string(key));
  }
}

namespace {

// A stored entry read through a linear relabeling of curves, with the
// coefficients conjugated if conj.
struct EntryView {
  const SkeinElement* base = nullptr;
  // (i,j) -> (a i + c j, b i + d j)
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  bool conj = false;

  PQ image(PQ v) const { return canonicalize(a * v.p + c * v.q, b * v.p + d * v.q); }

  EntryView then(std::int64_t a2, std::int64_t b2, std::int64_t c2, std::int64_t d2,
                 bool conj2) const {
    EntryView out = *this;
    out.a = a2 * a + c2 * b;
    out.b = b2 * a + d2 * b;
    out.c = a2 * c + c2 * d;
    out.d = b2 * c + d2 * d;
    out.conj = conj != conj2;
    return out;
  }
  EntryView twisted(std::int64_t t) const { return then(1, t, 0, 1, false); }
  EntryView opposed() const { return then(1, 1, 0, -1, true); }
  EntryView reversed() const { return then(0, 1, 1, 0, false); }
};

EntryView view_of(const SkeinElement& x) { return {&x}; }

// Table access for the recursion steps. Strict resolvers fail on a missing
// entry; lazy ones compute it from the recursion and insert it.
class Resolver {
 public:
  explicit Resolver(const MemoTable& table) : table_(const_cast<MemoTable*>(&table)) {}
  Resolver(MemoTable& table, bool lazy) : table_(&table), lazy_(lazy) {}

  const SkeinElement& at(const DiscrepancyKey& key);

 private:
  MemoTable* table_;
  bool lazy_ = false;
};

SkeinElement step_p(Resolver& r, std::int64_t p, std::int64_t q);
SkeinElement step_s(Resolver& r, std::int64_t p, std::int64_t q, std::int64_t s);

const SkeinElement& Resolver::at(const DiscrepancyKey& key) {
  if (const auto* v = table_->find(key)) return *v;
  if (!lazy_) throw MissingEntryError(key);
  SkeinElement value;
  if (key.s > 1) {
    value = step_s(*this, key.p, key.q, key.s - 1);
  } else if (key.p == 2 && key.q == 1) {
    value = scalar_element(1);
  } else {
    value = step_p(*this, key.p - 1, key.q);
  }
  table_->insert(key, std::move(value));
  return *table_->find(key);
}

EntryView view_s(Resolver& table, std::int64_t p, std::int64_t q, std::int64_t s) {
  if (s < 0) s = -s;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (s == 0 || p <= 1) return {};
  const std::int64_t t = floor_div(q, p);
  const std::int64_t rem = q - t * p;
  if (rem == 0 && s == 1) return {};
  const bool folded = 2 * rem > p;
  EntryView v{&table.at({p, folded ? p - rem : rem, 0, s})};
  if (folded) v = v.opposed();
  return v.twisted(t);
}

EntryView view_10(Resolver& table, std::int64_t m, std::int64_t n) {
  if (n < 0) {
    m = -m;
    n = -n;
  }
  if (n <= 1) return {};
  const std::int64_t a = floor_div(m, n);
  return view_s(table, n, m - a * n, 1).twisted(a).reversed();
}

// out += c * A^shift * coeff * eta^k * v
void accumulate(SkeinElement& out, const EntryView& v, std::uint32_t k, const LaurentPoly& coeff,
                Exponent shift, const Integer& c) {
  if (v.base == nullptr || coeff.is_zero()) return;
  if (coeff.size() == 1) {
    const auto& [e0, c0] = coeff.terms().front();
    const Integer scale = c * c0;
    for (const auto& [key, value] : v.base->terms()) {
      out.add_term({key.eta_pow + k, v.image(key.curve)}, value, shift + e0, scale, v.conj);
    }
    return;
  }
  // conj(x) * y = conj(x * conj(y))
  const LaurentPoly factor = v.conj ? coeff.conjugate() : coeff;
  for (const auto& [key, value] : v.base->terms()) {
    out.add_term({key.eta_pow + k, v.image(key.curve)}, value * factor, shift,
                 c, v.conj);
  }
}

// Calls f(key, coefficient) for every term of the view.
template <class F>
void for_each_term(const EntryView& v, F&& f) {
  if (v.base == nullptr) return;
  for (const auto& [key, value] : v.base->terms()) {
    const BasisKey image{key.eta_pow, v.image(key.curve)};
    if (v.conj) {
      f(image, value.conjugate());
    } else {
      f(image, value);
    }
  }
}

// out += c * A^shift * T(1,0) * x
void add_T10_times(SkeinElement& out, const EntryView& x, Resolver& table, Exponent shift,
                   const Integer& c) {
  for_each_term(x, [&](const BasisKey& key, const LaurentPoly& coeff) {
    const auto [a, b] = key.curve;
    if (key.curve.is_empty()) {
      add_chebyshev(out, key.eta_pow, 1, 0, coeff, shift, c);
      return;
    }
    // T(1,0) T(a,b) = A^b T(a+1,b) + A^-b T(a-1,b) + eta D(1,0;a,b)
    add_chebyshev(out, key.eta_pow, a + 1, b, coeff, shift + b, c);
    add_chebyshev(out, key.eta_pow, a - 1, b, coeff, shift - b, c);
    accumulate(out, view_10(table, a, b), key.eta_pow + 1, coeff, shift, c);
  });
}

// out += c * A^shift * x * T(0,1)
void add_times_T01(SkeinElement& out, const EntryView& x, Resolver& table, Exponent shift,
                   const Integer& c) {
  for_each_term(x, [&](const BasisKey& key, const LaurentPoly& coeff) {
    const auto [a, b] = key.curve;
    if (key.curve.is_empty()) {
      add_chebyshev(out, key.eta_pow, 0, 1, coeff, shift, c);
      return;
    }
    // T(a,b) T(0,1) = A^a T(a,b+1) + A^-a T(a,b-1) + eta D(a,b;0,1)
    add_chebyshev(out, key.eta_pow, a, b + 1, coeff, shift + a, c);
    add_chebyshev(out, key.eta_pow, a, b - 1, coeff, shift - a, c);
    accumulate(out, view_s(table, a, b, 1), key.eta_pow + 1, coeff, shift, c);
  });
}

SkeinElement materialize(const EntryView& v) {
  SkeinElement out;
  accumulate(out, v, 0, 1, 0, 1);
  return out;
}

SkeinElement step_p(Resolver& table, std::int64_t p, std::int64_t q) {
  SkeinElement out;
  add_T10_times(out, view_s(table, p, q, 1), table, -q, 1);
  accumulate(out, view_s(table, p - 1, q, 1), 0, 1, -2 * q, -1);
  accumulate(out, view_10(table, p, q - 1), 0, 1, -p - q, 1);
  add_times_T01(out, view_10(table, p, q), table, -q, -1);
  accumulate(out, view_10(table, p, q + 1), 0, 1, p - q, 1);
  return out;
}

SkeinElement step_s(Resolver& table, std::int64_t p, std::int64_t q, std::int64_t s) {
  SkeinElement out;
  add_times_T01(out, view_s(table, p, q, s), table, 0, 1);
  accumulate(out, view_s(table, p, q, s - 1), 0, 1, 0, -1);
  accumulate(out, view_s(table, p, q + s, 1), 0, 1, p * s, 1);
  accumulate(out, view_s(table, p, q - s, 1), 0, 1, -p * s, 1);
  return out;
}

}  // namespace

SkeinElement lookup_s(const MemoTable& table, std::int64_t p, std::int64_t q, std::int64_t s) {
  Resolver r(table);
  return materialize(view_s(r, p, q, s));
}

SkeinElement lookup_s1(const MemoTable& table, std::int64_t p, std::int64_t q) {
  return lookup_s(table, p, q, 1);
}

SkeinElement lookup_10(const MemoTable& table, std::int64_t m, std::int64_t n) {
  Resolver r(table);
  return materialize(view_10(r, m, n));
}

SkeinElement multiply_by_T10(const SkeinElement& x, const MemoTable& table) {
  SkeinElement out;
  Resolver r(table);
  add_T10_times(out, view_of(x), r, 0, 1);
  return out;
}

SkeinElement multiply_by_T01(const SkeinElement& x, const MemoTable& table) {
  SkeinElement out;
  Resolver r(table);
  add_times_T01(out, view_of(x), r, 0, 1);
  return out;
}

SkeinElement recursion_step_p(std::int64_t p, std::int64_t q, const MemoTable& table) {
  Resolver r(table);
  return step_p(r, p, q);
}

SkeinElement recursion_step_s(std::int64_t p, std::int64_t q, std::int64_t s,
                              const MemoTable& table) {
  Resolver r(table);
  return step_s(r, p, q, s);
}

void fill_table_s1(MemoTable& table, std::int64_t p_max, std::int64_t q_max) {
  if (p_max < 2) return;
  q_max = std::min(q_max, p_max / 2);
  table.insert({2, 1, 0, 1}, scalar_element(1));
  for (std::int64_t n = 1; n <= q_max; ++n) {
    // D(n,n;0,1) = 0 and D(n+1,n;0,1) = opp(D(n+1,1;0,1)) are reached by
    // lookup; entries with n > m/2 are opposition images of earlier rows.
    for (std::int64_t m = std::max<std::int64_t>(n + 2, 2 * n); m <= p_max; ++m) {
      const DiscrepancyKey key{m, n, 0, 1};
      if (table.contains(key)) continue;
      table.insert(key, recursion_step_p(m - 1, n, table));
    }
  }
}

MemoTable fill_table_s1(std::int64_t p_max, std::int64_t q_max) {
  MemoTable table;
  fill_table_s1(table, p_max, q_max);
  return table;
}

void fill_table_s(std::int64_t p, std::int64_t q, std::int64_t s_max, MemoTable& table) {
  for (std::int64_t i = 1; 2 * i <= p; ++i) table.at({p, i, 0, 1});
  for (std::int64_t m = 2; m <= s_max; ++m) {
    const DiscrepancyKey key{p, q, 0, m};
    if (table.contains(key)) continue;
    table.insert(key, recursion_step_s(p, q, m - 1, table));
  }
}

SkeinElement discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s,
                         MemoTable& table) {
  const std::int64_t det = p * s - r * q;
  if (det >= -1 && det <= 1) return {};
  const PairReduction red = reduce_pair(p, q, r, s);
  if (red.p1 == 1 || (red.q1 == 0 && red.s1 == 1)) return {};
  const std::int64_t q2 = std::min(red.q1, red.p1 - red.q1);
  Resolver resolver(table, true);
  SkeinElement value = resolver.at({red.p1, q2, 0, red.s1});
  if (q2 != red.q1) value = opp(value);
  return act_on_skein(red.phi.inverse(), value);
}

SkeinElement discrepancy(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  MemoTable table;
  return discrepancy(p, q, r, s, table);
}

SkeinElement multiply_basis(const BasisKey& x, const BasisKey& y, MemoTable& table) {
  const std::uint32_t k = x.eta_pow + y.eta_pow;
  if (x.curve.is_empty()) return chebyshev_prime_element(y.curve.p, y.curve.q, k);
  if (y.curve.is_empty()) return chebyshev_prime_element(x.curve.p, x.curve.q, k);
  const auto [p, q] = x.curve;
  const auto [r, s] = y.curve;
  const std::int64_t det = p * s - r * q;
  SkeinElement out;
  add_chebyshev(out, k, p + r, q + s, 1, det);
  add_chebyshev(out, k, p - r, q - s, 1, -det);
  add_eta_scaled(out, discrepancy(p, q, r, s, table), k + 1, 1);
  return out;
}

SkeinElement multiply_basis(const BasisKey& x, const BasisKey& y) {
  MemoTable table;
  return multiply_basis(x, y, table);
}

SkeinElement multiply(const SkeinElement& x, const SkeinElement& y, MemoTable& table) {
  SkeinElement out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const LaurentPoly c = cx * cy;
      const SkeinElement product = multiply_basis(kx, ky, table);
      for (const auto& [k, v] : product.terms()) out.add_term(k, v * c);
    }
  }
  return out;
}

SkeinElement multiply(const SkeinElement& x, const SkeinElement& y) {
  MemoTable table;
  return multiply(x, y, table);
}

bool satisfies_term_bound(const DiscrepancyKey& key, const SkeinElement& value) {
  return std::all_of(value.terms().begin(), value.terms().end(), [&](const auto& term) {
    const PQ c = term.first.curve;
    if (c.p < 0 || c.p > key.p - 2) return false;
    if (key.s == 1) return c.q >= 0 && c.q <= key.q - 1;
    return std::abs(c.q) <= key.q + key.s - 2;
  });
}

bool satisfies_tight_term_bound(const DiscrepancyKey& key, const SkeinElement& value) {
  if (key.s != 1) return satisfies_term_bound(key, value);
  return std::all_of(value.terms().begin(), value.terms().end(), [&](const auto& term) {
    const PQ c = term.first.curve;
    return c.p >= 0 && c.p <= key.p - 2 && c.q >= 0 && c.q <= key.q - 2;
  });
}

void save_table(const MemoTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheIoError("cannot open cache for writing: " + path.string());
  out << kCacheHeader << '\n';
  for (const auto& [k, v] : table.entries()) {
    out << k.p << ' ' << k.q << ' ' << k.r << ' ' << k.s << ' ' << to_json(v).dump() << '\n';
  }
  out << "END " << table.size() << '\n';
  out.flush();
  if (!out) throw CacheIoError("failed writing cache: " + path.string());
}

MemoTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheIoError("cannot open cache for reading: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw CacheCorruptError("empty cache file");
  if (line != kCacheHeader) {
    if (line.rfind("SKEINTORUS-CACHE ", 0) == 0) {
      throw CacheVersionError("unsupported cache version: " + line);
    }
    throw CacheCorruptError("missing cache header");
  }
  MemoTable table;
  bool ended = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (ended) throw CacheCorruptError("data after END marker at " + where);
    std::istringstream fields(line);
    if (line.rfind("END ", 0) == 0) {
      std::string tag;
      std::size_t count = 0;
      if (!(fields >> tag >> count) || count != table.size()) {
        throw CacheCorruptError("END marker count mismatch at " + where);
      }
      ended = true;
      continue;
    }
    DiscrepancyKey key;
    if (!(fields >> key.p >> key.q >> key.r >> key.s)) {
      throw CacheCorruptError("bad key at " + where);
    }
    if (!key.is_normalized()) throw CacheCorruptError("key not normalized at " + where);
    std::string rest;
    std::getline(fields, rest);
    SkeinElement value;
    try {
      value = skein_from_json(nlohmann::json::parse(rest));
    } catch (const std::exception& e) {
      throw CacheCorruptError("bad entry at " + where + ": " + e.what());
    }
    if (!satisfies_term_bound(key, value)) {
      throw CacheCorruptError("term bound violated at " + where);
    }
    if (table.contains(key)) throw CacheCorruptError("duplicate key at " + where);
    table.insert(key, std::move(value));
  }
  if (in.bad()) throw CacheIoError("failed reading cache: " + path.string());
  if (!ended) throw CacheCorruptError("cache truncated (no END marker): " + path.string());

  // Recompute the cheap entries from scratch.
  MemoTable fresh;
  for (const auto& [key, value] : table.entries()) {
    if (key.p * key.s > 10) continue;
    if (discrepancy(key.p, key.q, 0, key.s, fresh) != value) {
      throw CacheCorruptError("entry " + key_string(key) + " does not match recomputation");
    }
  }
  return table;
}

}  // namespace skeintorus
