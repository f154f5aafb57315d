#include "lrbv/poly_parser.hpp"

#include <cctype>
#include <sstream>

namespace lrbv {

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& what) {
  std::ostringstream os;
  os << line << ":" << column << ": " << what;
  return os.str();
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, std::size_t line, std::size_t offset)
      : text_(text), nvars_(nvars), line_(line), offset_(offset) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, offset_ + pos_ + 1, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    mpz_class e = integer();
    if (e > 64) fail("exponent too large");
    Poly out = Poly::constant(nvars_, Rational(1));
    for (unsigned long i = 0; i < e.get_ui(); ++i) out *= base;
    return out;
  }

  Poly atom() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Poly::constant(nvars_, q);
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
      mpz_class idx = integer();
      if (idx < 1 || idx > nvars_) {
        pos_ = at;
        std::ostringstream os;
        os << "variable x" << idx.get_str() << " out of range (algebra has " << nvars_
           << " variables)";
        fail(os.str());
      }
      return Poly::variable(nvars_, idx.get_ui() - 1);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) fail("unexpected end of polynomial");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(located(line, column, what)), line_(line), column_(column), message_(what) {}

Poly parse_poly(std::string_view text, std::size_t nvars, std::size_t line,
                std::size_t column_offset) {
  return PolyParser(text, nvars, line, column_offset).parse();
}

Rational parse_rational(std::string_view text) {
  auto p = parse_poly(text, 0);
  return *p.constant_value();
}

}  // namespace lrbv
