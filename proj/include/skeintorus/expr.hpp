#pragma once

// Text input for skein elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | INT | 'A' ['^' ['('] ['-'] INT [')']] | 'eta' | 'd'
//           | 'T(' INT ',' INT ')' | '(' INT ',' INT ')' | '(' expr ')'
//
// T(p,q) is the Chebyshev threading, (p,q) the multicurve, d the boundary
// loop. Products are skein products, first factor on top.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "skeintorus/discrepancy.hpp"

namespace skeintorus {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

SkeinElement parse_element(const std::string& text, MemoTable& table);
SkeinElement parse_element(const std::string& text);

}  // namespace skeintorus
