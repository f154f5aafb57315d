#pragma once

#include "lrbv/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrbv {

// Parse failure with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Exact parser for polynomial text over Q[x1..x_nvars]:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer ['/' integer] | 'x' integer | '(' expr ')'
// `line` and `column_offset` place errors inside a larger file.
Poly parse_poly(std::string_view text, std::size_t nvars, std::size_t line = 1,
                std::size_t column_offset = 0);

Rational parse_rational(std::string_view text);

}  // namespace lrbv
