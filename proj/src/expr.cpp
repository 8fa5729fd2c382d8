#include "skeintorus/expr.hpp"

#include <cctype>
#include <limits>

namespace skeintorus {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, MemoTable& table) : text_(text), table_(table) {}

  SkeinElement parse() {
    SkeinElement value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(const std::string& w) {
    skip_space();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer natural() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  std::int64_t small_int() {
    const bool negative = accept('-');
    const std::size_t start = pos_;
    const Integer n = natural();
    if (n > std::numeric_limits<std::int32_t>::max()) {
      pos_ = start;
      fail("integer out of range");
    }
    const auto v = static_cast<std::int64_t>(n);
    return negative ? -v : v;
  }

  // After '(' : is this "INT , INT )"?
  bool looks_like_pair() const {
    std::size_t i = pos_;
    auto space = [&] {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    };
    auto integer = [&] {
      space();
      if (i < text_.size() && text_[i] == '-') ++i;
      space();
      const std::size_t start = i;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
      return i > start;
    };
    if (!integer()) return false;
    space();
    if (i >= text_.size() || text_[i] != ',') return false;
    ++i;
    if (!integer()) return false;
    space();
    return i < text_.size() && text_[i] == ')';
  }

  PQ pair_body() {
    const std::int64_t p = small_int();
    expect(',');
    const std::int64_t q = small_int();
    expect(')');
    return {p, q};
  }

  SkeinElement expr() {
    SkeinElement value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  SkeinElement term() {
    SkeinElement value = factor();
    while (accept('*')) value = multiply(value, factor(), table_);
    return value;
  }

  SkeinElement factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('-')) return -factor();
    if (at_digit()) return scalar_element(LaurentPoly(natural()));
    if (accept_word("eta")) return chebyshev_prime_element(0, 0, 1);
    if (accept_word("d")) {
      return from_multicurve(multicurve_element(0, 0, 1));
    }
    if (accept_word("A")) {
      Exponent e = 1;
      if (accept('^')) {
        const bool paren = accept('(');
        e = small_int();
        if (paren) expect(')');
      }
      return scalar_element(LaurentPoly::monomial(e));
    }
    if (accept_word("T")) {
      expect('(');
      const PQ c = pair_body();
      return chebyshev_element(c.p, c.q);
    }
    if (accept('(')) {
      if (looks_like_pair()) {
        const PQ c = pair_body();
        return from_multicurve(multicurve_element(c.p, c.q));
      }
      SkeinElement inner = expr();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  const std::string& text_;
  MemoTable& table_;
  std::size_t pos_ = 0;
};

}  // namespace

SkeinElement parse_element(const std::string& text, MemoTable& table) {
  return Parser(text, table).parse();
}

SkeinElement parse_element(const std::string& text) {
  MemoTable table;
  return parse_element(text, table);
}

}  // namespace skeintorus
