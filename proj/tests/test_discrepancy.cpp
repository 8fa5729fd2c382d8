#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "skeintorus/discrepancy.hpp"
#include "support.hpp"

using namespace skeintorus;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "skeintorus-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("discrepancy") {

TEST_CASE("small values") {
  CHECK(discrepancy(2, 1, 0, 1) == scalar_element(1));
  CHECK(discrepancy(2, 0, 0, 2) == scalar_element(quantum_int(2)));
  CHECK(discrepancy(7, 0, 0, 1).is_zero());
  CHECK(discrepancy(3, 5, 1, 2).is_zero());  // det 1
  CHECK(discrepancy(4, 2, 2, 1).is_zero());  // det 0
}

TEST_CASE("D(10,4;0,1), value confirmed by the state sum") {
  const LaurentPoly q2 = quantum_int(2);
  SkeinElement expect = chebyshev_element(8, 3, 0, LaurentPoly::monomial(-2));
  expect += chebyshev_element(6, 3, 0, LaurentPoly::monomial(6) * q2);
  expect += chebyshev_element(4, 1, 0, LaurentPoly::monomial(-4) * q2);
  expect += chebyshev_element(2, 1, 1, LaurentPoly::monomial(2));
  expect += chebyshev_element(2, 1, 0, LaurentPoly::monomial(2) * quantum_int(4));
  CHECK(discrepancy(10, 4, 0, 1) == expect);
}

TEST_CASE("twist, opposition, reverse and the D(1,0;p,q) reduction") {
  MemoTable table;
  for (std::int64_t p = 1; p <= 10; ++p) {
    for (std::int64_t q = 0; q < p; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto d = discrepancy(p, q, 0, 1, table);
      CHECK(tw(d) == discrepancy(p, p + q, 0, 1, table));
      CHECK(opp(d) == discrepancy(p, p - q, 0, 1, table));
      CHECK(rev(discrepancy(1, 0, q, p, table)) == d);
      if (q >= 1) {
        const std::int64_t a = p / q, c = p % q;
        CHECK(discrepancy(1, 0, p, q, table) ==
              rev(tw_pow(discrepancy(q, c, 0, 1, table), a)));
      }
    }
  }
}

TEST_CASE("mapping class equivariance of products") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> v(-5, 5);
  const MappingClass phi(2, 1, 1, 1);
  MemoTable table;
  for (int i = 0; i < 60; ++i) {
    const BasisKey x{0, canonicalize(v(rng), v(rng))}, y{0, canonicalize(v(rng), v(rng))};
    const auto lhs = act_on_skein(phi, multiply_basis(x, y, table));
    const BasisKey fx{0, act_on_pq(phi, x.curve)}, fy{0, act_on_pq(phi, y.curve)};
    CHECK(lhs == multiply_basis(fx, fy, table));
  }
}

TEST_CASE("empty link and eta are central") {
  const auto t = chebyshev_element(3, 2);
  CHECK(multiply(scalar_element(1), t) == t);
  CHECK(multiply(t, chebyshev_element(0, 0)) == t + t);
  const auto eta = chebyshev_prime_element(0, 0, 1);
  CHECK(multiply(eta, t) == multiply(t, eta));
  CHECK(multiply(eta, t) == chebyshev_element(3, 2, 1));
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(123);
  MemoTable table;
  for (int i = 0; i < 25; ++i) {
    const auto x = testing_support::random_element(rng, 2, 3, 1);
    const auto y = testing_support::random_element(rng, 2, 3, 1);
    const auto z = testing_support::random_element(rng, 2, 3, 1);
    CHECK(multiply(multiply(x, y, table), z, table) == multiply(x, multiply(y, z, table), table));
  }
}

TEST_CASE("full fill and on-demand fill agree") {
  const MemoTable full = fill_table_s1(14, 7);
  CHECK(full.size() > 20);
  MemoTable lazy;
  for (const auto& [k, v] : full.entries()) {
    CAPTURE(k.p);
    CAPTURE(k.q);
    CHECK(discrepancy(k.p, k.q, k.r, k.s, lazy) == v);
  }
  MemoTable with_s = full;
  fill_table_s(6, 1, 4, with_s);
  for (std::int64_t s = 2; s <= 4; ++s) {
    MemoTable fresh;
    CHECK(*with_s.find({6, 1, 0, s}) == discrepancy(6, 1, 0, s, fresh));
  }
}

TEST_CASE("term bounds hold on every entry") {
  MemoTable table;
  discrepancy(30, 15, 0, 1, table);
  discrepancy(9, 2, 0, 5, table);
  std::size_t tight = 0, s1 = 0;
  for (const auto& [k, v] : table.entries()) {
    CAPTURE(k.p);
    CAPTURE(k.q);
    CAPTURE(k.s);
    CHECK(satisfies_term_bound(k, v));
    if (k.s == 1 && !v.is_zero()) {
      ++s1;
      tight += satisfies_tight_term_bound(k, v);
    }
  }
  // the q-2 bound is reported only; q-1 is attained, e.g. D(4,2;0,1) = T(2,1)
  CHECK_FALSE(satisfies_tight_term_bound({4, 2, 0, 1}, chebyshev_element(2, 1)));
  MESSAGE("q-2 bound holds on " << tight << " of " << s1 << " nonzero s=1 entries");
}

TEST_CASE("strict recursion steps refuse missing entries") {
  MemoTable empty;
  CHECK_THROWS_AS(recursion_step_p(5, 2, empty), MissingEntryError);
  CHECK_THROWS_AS(recursion_step_s(5, 2, 1, empty), MissingEntryError);
  try {
    recursion_step_p(5, 2, empty);
  } catch (const MissingEntryError& e) {
    CHECK(e.key().is_normalized());
  }
  const MemoTable table = fill_table_s1(8, 4);
  CHECK(recursion_step_p(7, 3, table) == *table.find({8, 3, 0, 1}));
  for (std::int64_t p = 1; p < 8; ++p) CHECK(recursion_step_p(p, 0, table).is_zero());
}

TEST_CASE("memo table is insert-only") {
  MemoTable t;
  t.insert({4, 1, 0, 1}, scalar_element(1));
  CHECK_NOTHROW(t.insert({4, 1, 0, 1}, scalar_element(1)));
  CHECK_THROWS_AS(t.insert({4, 1, 0, 1}, scalar_element(2)), std::logic_error);
  CHECK_THROWS_AS(t.insert({4, 3, 0, 1}, scalar_element(1)), std::logic_error);
  CHECK_THROWS_AS(t.insert({4, 1, 1, 1}, scalar_element(1)), std::logic_error);
  CHECK_THROWS_AS(t.at({5, 1, 0, 1}), MissingEntryError);
}

TEST_CASE("cache round trip and failure modes") {
  MemoTable table;
  discrepancy(12, 5, 0, 1, table);
  discrepancy(4, 1, 0, 3, table);
  const fs::path good = temp_file("good.cache");
  save_table(table, good);
  CHECK(load_table(good) == table);
  const std::string text = slurp(good);

  SUBCASE("version") {
    const fs::path p = temp_file("version.cache");
    spit(p, "SKEINTORUS-CACHE v0" + text.substr(text.find('\n')));
    CHECK_THROWS_AS(load_table(p), CacheVersionError);
  }
  SUBCASE("missing header") {
    const fs::path p = temp_file("header.cache");
    spit(p, "hello\n");
    CHECK_THROWS_AS(load_table(p), CacheCorruptError);
  }
  SUBCASE("truncated at a line boundary") {
    const fs::path p = temp_file("trunc.cache");
    spit(p, text.substr(0, text.rfind("END")));
    CHECK_THROWS_AS(load_table(p), CacheCorruptError);
  }
  SUBCASE("truncated mid-line") {
    const fs::path p = temp_file("trunc2.cache");
    spit(p, text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(load_table(p), CacheCorruptError);
  }
  SUBCASE("garbage entry") {
    const fs::path p = temp_file("garbage.cache");
    std::string bad = text;
    bad.insert(bad.find('\n') + 1, "3 1 0 1 {not json}\n");
    spit(p, bad);
    CHECK_THROWS_AS(load_table(p), CacheCorruptError);
  }
  SUBCASE("wrong value for a cheap entry") {
    const fs::path p = temp_file("wrong.cache");
    MemoTable forged;
    forged.insert({3, 1, 0, 1}, scalar_element(5));
    save_table(forged, p);
    CHECK_THROWS_AS(load_table(p), CacheCorruptError);
  }
  SUBCASE("io") {
    CHECK_THROWS_AS(load_table(temp_file("does-not-exist.cache")), CacheIoError);
    CHECK_THROWS_AS(save_table(table, "/nonexistent-dir/x.cache"), CacheIoError);
  }
}

}
