#pragma once

#include "lrbv/exterior.hpp"
#include "lrbv/gerstenhaber.hpp"
#include "lrbv/lie_rinehart.hpp"

#include <functional>
#include <vector>

namespace lrbv {

// (A,L)-connection on L: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
class LeftConnectionOnL {
 public:
  LeftConnectionOnL(std::size_t rank, std::size_t nvars)
      : rank_(rank), table_(rank * rank * rank, Poly(nvars)) {}

  std::size_t rank() const { return rank_; }
  const Poly& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return table_.at((i * rank_ + j) * rank_ + k);
  }
  Poly& gamma(std::size_t i, std::size_t j, std::size_t k) { return table_.at((i * rank_ + j) * rank_ + k); }

  friend bool operator==(const LeftConnectionOnL&, const LeftConnectionOnL&) = default;

 private:
  std::size_t rank_;
  std::vector<Poly> table_;
};

// nabla_alpha xi: A-linear in alpha, Leibniz over the anchor in xi.
LElement left_connection_apply(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla,
                               const LElement& alpha, const LElement& xi);

// (A,L)-connection on Lambda^n L: nabla_{e_i}(e_1^...^e_n) = gamma[i] e_1^...^e_n.
struct TopConnection {
  std::vector<Poly> gamma;

  static TopConnection zero(const LieRinehartAlgebra& alg);
  friend bool operator==(const TopConnection&, const TopConnection&) = default;
  std::string to_string() const;
};

// A-linear endomorphism of L; matrix[k][j] is the e_k coefficient of the
// image of e_j.
struct EndoOfL {
  std::vector<std::vector<Poly>> matrix;

  LElement apply(const LElement& xi) const;
  friend bool operator==(const EndoOfL&, const EndoOfL&) = default;
};

TopElement lie_derivative_top(const LieRinehartAlgebra& alg, const LElement& alpha, const TopElement& x);

TopElement connection_apply_top(const LieRinehartAlgebra& alg, const TopConnection& nabla,
                                const LElement& alpha, const TopElement& x);

// table[i][j] = nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j].
std::vector<std::vector<LElement>> torsion(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla);
bool is_torsion_free(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla);

// Torsion on general arguments.
LElement torsion_apply(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla, const LElement& alpha,
                       const LElement& beta);

// table[i][j] = rho(e_i)(gamma_j) - rho(e_j)(gamma_i) - sum_k c[i][j][k] gamma_k.
std::vector<std::vector<Poly>> curvature_top(const LieRinehartAlgebra& alg, const TopConnection& nabla);
bool is_flat(const LieRinehartAlgebra& alg, const TopConnection& nabla);

// Covariant derivative on Alt^{n-p}(L, Lambda^n L) with the sign convention
//   (d f)(xi_p..xi_n) = sum_j (-1)^{j-1} nabla_{xi_j} f(..^xi_j..)
//                     + (-1)^{p+1} sum_{j<k} (-1)^{j+k} f([xi_j,xi_k], ..^xi_j..^xi_k..),
// arguments indexed p..n. Output of degree n+1 is the zero form.
AltForm covariant_derivative(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f);

// Phi_alpha(xi) = [alpha, xi] - nabla_alpha xi.
EndoOfL phi_map(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla, const LElement& alpha);

Poly trace_endo(const EndoOfL& e);

// gamma_i = sum_k Gamma(i,k,k).
TopConnection induced_top_connection(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla);

// Right connection on Hom(Lambda^n L, Lambda^n L) = Alt^n(L, Lambda^n L):
// f o alpha = -lambda^nabla_alpha(f), (lambda^nabla_alpha f)(x) = nabla_alpha(f x) - f(lambda_alpha x).
AltForm generalized_lie_derivative(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f,
                                   const LElement& alpha);
AltForm dual_right_connection(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f,
                              const LElement& alpha);

// R-linear endomorphism of a free rank-one module M = A b, given by its
// action on coefficients (a b -> E(a) b).
using RankOneEndomorphism = std::function<Poly(const Poly&)>;

// The scalar div with E(b) = div b.
Poly divergence_rank_one(const RankOneEndomorphism& e, std::size_t nvars);

}  // namespace lrbv
