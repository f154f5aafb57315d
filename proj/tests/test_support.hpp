#pragma once

#include "lrbv/exterior.hpp"
#include "lrbv/lie_rinehart.hpp"
#include "lrbv/poly_parser.hpp"

#include <string>
#include <vector>

namespace lrbv::testing {

inline Poly P(const std::string& s, std::size_t m) { return parse_poly(s, m); }

inline LElement L(std::size_t m, const std::vector<std::string>& coeffs) {
  LElement x = LElement::zero(coeffs.size(), m);
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.coeffs[i] = P(coeffs[i], m);
  return x;
}

inline Multivector MV(std::size_t n, std::size_t m, const std::vector<std::size_t>& one_based, const std::string& c) {
  std::vector<std::size_t> idx;
  for (auto i : one_based) idx.push_back(i - 1);
  Poly coeff = P(c, m);
  // Insert in the given order so that e2^e1 style input carries its sign.
  Multivector acc = Multivector::scalar(coeff, n);
  for (auto i : idx) acc = wedge(acc, Multivector::blade(Blade::single(i), Poly::constant(m, Rational(1)), n));
  return acc;
}

// Q[x1..xm] with L = Der(A), e_i = d/dx_i.
inline LieRinehartAlgebra coordinate(std::size_t m) {
  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < m; ++i) {
    Derivation d = Derivation::zero(m);
    d.components[i] = Poly::constant(m, Rational(1));
    anchor.push_back(d);
  }
  std::vector<LElement> upper(m * (m > 0 ? m - 1 : 0) / 2, LElement::zero(m, m));
  return LieRinehartAlgebra("coordinate-" + std::to_string(m) + "d", m, m, anchor, upper);
}

// Ground field, [e1,e2] = e1.
inline LieRinehartAlgebra nonabelian2() {
  return LieRinehartAlgebra("nonabelian-dim2", 0, 2, {Derivation::zero(0), Derivation::zero(0)},
                            {L(0, {"1", "0"})});
}

// Ground field, basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieRinehartAlgebra sl2() {
  return LieRinehartAlgebra("sl2", 0, 3, std::vector<Derivation>(3, Derivation::zero(0)),
                            {L(0, {"0", "2", "0"}), L(0, {"0", "0", "-2"}), L(0, {"1", "0", "0"})});
}

// Ground field, [e1,e2] = e3.
inline LieRinehartAlgebra heisenberg() {
  return LieRinehartAlgebra("heisenberg-dim3", 0, 3, std::vector<Derivation>(3, Derivation::zero(0)),
                            {L(0, {"0", "0", "1"}), L(0, {"0", "0", "0"}), L(0, {"0", "0", "0"})});
}

// Q[x] with rho(e1) = d/dx, rho(e2) = x d/dx, [e1,e2] = e1.
inline LieRinehartAlgebra affine1d() {
  return LieRinehartAlgebra("affine-1d", 1, 2, {Derivation{{P("1", 1)}}, Derivation{{P("x1", 1)}}},
                            {L(1, {"1", "0"})});
}

inline LieRinehartAlgebra poisson_linear() {
  return build_poisson_cotangent({{P("0", 2), P("x1", 2)}, {P("-x1", 2), P("0", 2)}}, "poisson-linear-2d");
}

inline LieRinehartAlgebra poisson_symplectic() {
  return build_poisson_cotangent({{P("0", 2), P("1", 2)}, {P("-1", 2), P("0", 2)}}, "poisson-symplectic-2d");
}

inline std::vector<LieRinehartAlgebra> all_test_algebras() {
  return {coordinate(2), coordinate(3), nonabelian2(), sl2(), heisenberg(), affine1d(), poisson_linear(),
          poisson_symplectic(), LieRinehartAlgebra::abelian("abelian-dim2", 0, 2)};
}

}  // namespace lrbv::testing
