#pragma once

#include "lrbv/lie_rinehart.hpp"
#include "lrbv/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lrbv {

inline constexpr std::size_t kMaxRank = 16;

// Strictly increasing index set S of {0..n-1}, stored as a bit mask.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t mask) : mask_(mask) {}
  static Blade from_indices(const std::vector<std::size_t>& idx);  // must be distinct
  static constexpr Blade single(std::size_t i) { return Blade(std::uint32_t{1} << i); }
  static constexpr Blade full(std::size_t n) { return Blade((std::uint32_t{1} << n) - 1); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr std::size_t degree() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1u; }
  std::vector<std::size_t> indices() const;
  Blade complement(std::size_t n) const { return Blade(full(n).mask_ & ~mask_); }
  Blade without(std::size_t i) const { return Blade(mask_ & ~(std::uint32_t{1} << i)); }

  // Degree first, then lexicographic on the sorted index tuple.
  friend bool operator<(Blade a, Blade b);
  friend constexpr bool operator==(Blade a, Blade b) = default;

  std::string to_string() const;  // e{1,2}

 private:
  std::uint32_t mask_ = 0;
};

// Sign of e_S ^ e_T relative to e_{S u T}; 0 when S and T intersect.
int wedge_sign(Blade s, Blade t);

// All blades of the given degree in increasing order.
std::vector<Blade> blades_of_degree(std::size_t n, std::size_t degree);

// Element of Lambda_A L, possibly inhomogeneous.
class Multivector {
 public:
  using TermMap = std::map<Blade, Poly>;

  Multivector(std::size_t rank, std::size_t nvars) : rank_(rank), nvars_(nvars) {}

  static Multivector scalar(const Poly& a, std::size_t rank);
  static Multivector blade(Blade b, const Poly& coeff, std::size_t rank);
  static Multivector from_element(const LElement& x);

  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(Blade b) const;

  // Degree if all terms share one; the zero multivector is homogeneous of
  // every degree and reports `fallback`.
  std::optional<std::size_t> homogeneous_degree(std::size_t fallback = 0) const;

  void add_term(Blade b, const Poly& coeff);
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const;
  friend Multivector operator*(const Poly& a, const Multivector& u);
  friend Multivector operator*(const Rational& c, Multivector u);
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.rank_ == b.rank_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const Multivector& o) const;

  std::size_t rank_;
  std::size_t nvars_;
  TermMap terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);

// Coefficient of e_1 ^ ... ^ e_n in an element of Lambda^n L.
struct TopElement {
  Poly coefficient;
  friend bool operator==(const TopElement&, const TopElement&) = default;
};

// u of degree p, v of degree n-p: the coefficient of u ^ v on e_1 ^ ... ^ e_n.
TopElement top_pairing(const Multivector& u, const Multivector& v);

// Alternating A-multilinear form on L with values in Lambda^n L, stored by
// its values on increasing basis tuples (as multiples of e_1 ^ ... ^ e_n).
class AltForm {
 public:
  AltForm(std::size_t degree, std::size_t rank, std::size_t nvars)
      : degree_(degree), rank_(rank), nvars_(nvars) {}

  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Blade, Poly>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  Poly value(Blade tuple) const;
  void set_value(Blade tuple, const Poly& v);

  // Value on arbitrary arguments, expanded multilinearly.
  Poly evaluate(const std::vector<LElement>& args) const;
  // Value on a degree-q multivector (A-linear extension to Lambda^q L).
  Poly evaluate(const Multivector& u) const;

  AltForm& operator+=(const AltForm& o);
  AltForm operator-() const;
  friend AltForm operator*(const Poly& a, const AltForm& f);
  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.degree_ == b.degree_ && a.rank_ == b.rank_ && a.nvars_ == b.nvars_ &&
           a.values_ == b.values_;
  }

  std::string to_string() const;

 private:
  std::size_t degree_;
  std::size_t rank_;
  std::size_t nvars_;
  std::map<Blade, Poly> values_;
};

// phi_alpha(xi_{p+1},...,xi_n) = alpha ^ xi_{p+1} ^ ... ^ xi_n.
// Throws std::invalid_argument for inhomogeneous alpha.
AltForm phi_iso(const Multivector& alpha, std::size_t degree);
AltForm phi_iso(const Multivector& alpha);

// Inverse of phi_iso: the unique alpha of degree n - f.degree() with
// phi_iso(alpha) == f.
Multivector phi_inverse(const AltForm& f);

}  // namespace lrbv
