#pragma once

#include "lrbv/polynomial.hpp"

#include <string>
#include <vector>

namespace lrbv {

// alpha = sum_i coeffs[i] e_i in the free module L.
struct LElement {
  std::vector<Poly> coeffs;

  static LElement zero(std::size_t rank, std::size_t nvars);
  static LElement basis(std::size_t rank, std::size_t nvars, std::size_t i);  // e_{i+1}

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;

  LElement& operator+=(const LElement& o);
  LElement& operator-=(const LElement& o);
  friend LElement operator+(LElement a, const LElement& b) { return a += b; }
  friend LElement operator-(LElement a, const LElement& b) { return a -= b; }
  LElement operator-() const;
  friend LElement operator*(const Poly& a, const LElement& x);
  friend bool operator==(const LElement&, const LElement&) = default;

  std::string to_string() const;
};

// Lie-Rinehart algebra (A, L) with A = Q[x1..xm] and L free of rank n with a
// chosen basis e_1..e_n. Indices in the C++ API are 0-based.
//
// Structure functions are only stored for i < j; [e_j, e_i] = -[e_i, e_j] and
// [e_i, e_i] = 0 hold by construction.
class LieRinehartAlgebra {
 public:
  // anchor[i] is rho(e_i). upper[k] lists c[i][j][.] for pairs i<j in
  // row-major order: (0,1), (0,2), ..., (1,2), ...
  LieRinehartAlgebra(std::string name, std::size_t nvars, std::size_t rank,
                     std::vector<Derivation> anchor, std::vector<LElement> upper_brackets);

  // Zero anchor and zero brackets.
  static LieRinehartAlgebra abelian(std::string name, std::size_t nvars, std::size_t rank);

  const std::string& name() const { return name_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }

  const Derivation& anchor(std::size_t i) const { return anchor_.at(i); }
  const LElement& basis_bracket(std::size_t i, std::size_t j) const {
    return table_[i * rank_ + j];
  }
  Poly structure(std::size_t i, std::size_t j, std::size_t k) const {
    return basis_bracket(i, j).coeffs.at(k);
  }

  // Tr(ad e_i) = sum_k c[i][k][k]: the coefficient by which the Lie
  // derivative along e_i scales e_1 ^ ... ^ e_n.
  const Poly& adjoint_trace(std::size_t i) const { return ad_trace_.at(i); }

  Poly zero() const { return Poly(nvars_); }
  Poly one() const { return Poly::constant(nvars_, Rational(1)); }

 private:
  std::string name_;
  std::size_t nvars_;
  std::size_t rank_;
  std::vector<Derivation> anchor_;
  std::vector<LElement> table_;  // full n x n, antisymmetric
  std::vector<Poly> ad_trace_;
};

Poly anchor_apply(const LieRinehartAlgebra& alg, const LElement& alpha, const Poly& a);
Derivation anchor_of(const LieRinehartAlgebra& alg, const LElement& alpha);

// Bracket of general elements, extended from the basis by the Leibniz rule.
LElement bracket(const LieRinehartAlgebra& alg, const LElement& alpha, const LElement& beta);

struct AxiomViolation {
  enum class Kind { AnchorHomomorphism, Jacobi };
  Kind kind;
  std::vector<std::size_t> indices;  // 1-based basis indices
  std::string detail;

  std::string describe() const;
};

// Empty iff the anchor is a bracket homomorphism on basis pairs and Jacobi
// holds on basis triples.
std::vector<AxiomViolation> verify_axioms(const LieRinehartAlgebra& alg);

// Cotangent Lie-Rinehart algebra of a bivector pi on Q[x1..xm]:
// rho(dx_i) = sum_j pi[i][j] d/dx_j, [dx_i, dx_j] = sum_k (d pi[i][j]/dx_k) dx_k.
// Throws std::invalid_argument unless pi is antisymmetric.
LieRinehartAlgebra build_poisson_cotangent(const std::vector<std::vector<Poly>>& pi,
                                           std::string name = "poisson");

}  // namespace lrbv
