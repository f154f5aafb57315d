#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lrbv {

// Ground field. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lex with x1 > x2 > ...
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Element of A = Q[x1..xm]. Zero coefficients are never stored and every
// exponent vector has length nvars(), so == is mathematical equality.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);  // 0-based
  static Poly monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Value when the polynomial is a constant (including zero).
  std::optional<Rational> constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Formal partial derivative in variable `index` (0-based).
  // Throws std::out_of_range when index >= nvars().
  Poly derivative(std::size_t index) const;

  // Text in the algebra-file syntax, e.g. "3/2*x1^2*x2 - x2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const Rational& c);
  void require_same_nvars(const Poly& other, const char* op) const;

  std::size_t nvars_;
  TermMap terms_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_neg(const Poly& p);
Poly partial_derivative(const Poly& p, std::size_t index);

// A derivation of A written as sum_j components[j] * d/dx_j.
struct Derivation {
  std::vector<Poly> components;

  static Derivation zero(std::size_t nvars);
  std::size_t nvars() const { return components.size(); }
  bool is_zero() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
  std::string to_string() const;
};

Poly derivation_apply(const Derivation& d, const Poly& p);

// The first-order operator d1 o d2 - d2 o d1.
Derivation derivation_commutator(const Derivation& d1, const Derivation& d2);

}  // namespace lrbv
