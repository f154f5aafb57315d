#pragma once

#include "lrbv/connections.hpp"
#include "lrbv/gerstenhaber.hpp"
#include "lrbv/lie_rinehart.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrbv {

// Located input problem; line/column are 1-based, 0 when not applicable.
class InputError : public std::runtime_error {
 public:
  InputError(std::string source, std::size_t line, std::size_t column, const std::string& message);
  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Parsed algebra file:
//   name = <text>          m = <int>          n = <int>
//   anchor[i][j] = poly    (coefficient of d/dx_j in rho(e_i))
//   c[i][j][k] = poly      (i < j; [e_i,e_j] = sum_k c e_k)
//   Gamma[i][j][k] = poly  (nabla_{e_i} e_j = sum_k Gamma e_k)
//   gamma = [p1, .., pn]   r = [p1, .., pn]
//   suite = name[, name..]
// Indices are 1-based, '#' starts a comment, missing entries are zero.
struct AlgebraFile {
  std::string source;
  LieRinehartAlgebra algebra;
  std::optional<LeftConnectionOnL> left;
  std::optional<TopConnection> top;
  std::optional<RightConnectionOnA> right;
  std::vector<std::string> suites;

  // gamma if given, else from r, else induced from Gamma, else zero.
  TopConnection effective_top() const;
};

// Throws InputError on syntax errors and on axiom violations.
AlgebraFile parse_algebra_file(const std::string& text, const std::string& source);
AlgebraFile load_algebra_file(const std::string& path);

}  // namespace lrbv
