#include "lrbv/connections.hpp"

#include <sstream>
#include <stdexcept>

namespace lrbv {

namespace {

void check_top(const LieRinehartAlgebra& alg, const TopConnection& nabla) {
  if (nabla.gamma.size() != alg.rank()) throw std::invalid_argument("top connection: wrong length");
  for (const auto& g : nabla.gamma)
    if (g.nvars() != alg.nvars()) throw std::invalid_argument("top connection: variable count mismatch");
}

void check_left(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla) {
  if (nabla.rank() != alg.rank()) throw std::invalid_argument("connection on L: rank mismatch");
}

void check_element(const LieRinehartAlgebra& alg, const LElement& x) {
  if (x.rank() != alg.rank()) throw std::invalid_argument("element rank does not match algebra");
}

}  // namespace

LElement left_connection_apply(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla,
                               const LElement& alpha, const LElement& xi) {
  check_left(alg, nabla);
  check_element(alg, alpha);
  check_element(alg, xi);
  const std::size_t n = alg.rank();
  LElement out = LElement::zero(n, alg.nvars());
  for (std::size_t j = 0; j < n; ++j) out.coeffs[j] += anchor_apply(alg, alpha, xi.coeffs[j]);
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (xi.coeffs[j].is_zero()) continue;
      const Poly w = alpha.coeffs[i] * xi.coeffs[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!nabla.gamma(i, j, k).is_zero()) out.coeffs[k] += w * nabla.gamma(i, j, k);
    }
  }
  return out;
}

TopConnection TopConnection::zero(const LieRinehartAlgebra& alg) {
  return TopConnection{std::vector<Poly>(alg.rank(), alg.zero())};
}

std::string TopConnection::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < gamma.size(); ++i) os << (i ? ", " : "") << gamma[i].to_string();
  os << "]";
  return os.str();
}

LElement EndoOfL::apply(const LElement& xi) const {
  const std::size_t n = matrix.size();
  if (xi.rank() != n) throw std::invalid_argument("endomorphism: rank mismatch");
  const std::size_t m = n ? xi.coeffs[0].nvars() : 0;
  LElement out = LElement::zero(n, m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out.coeffs[k] += matrix[k][j] * xi.coeffs[j];
  return out;
}

TopElement lie_derivative_top(const LieRinehartAlgebra& alg, const LElement& alpha, const TopElement& x) {
  check_element(alg, alpha);
  // lambda_alpha(e_1^..^e_n) = sum_j (e_j coefficient of [alpha, e_j]) e_1^..^e_n.
  Poly scale = alg.zero();
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    scale += alpha.coeffs[i] * alg.adjoint_trace(i);
    scale -= derivation_apply(alg.anchor(i), alpha.coeffs[i]);
  }
  return TopElement{anchor_apply(alg, alpha, x.coefficient) + x.coefficient * scale};
}

TopElement connection_apply_top(const LieRinehartAlgebra& alg, const TopConnection& nabla, const LElement& alpha,
                                const TopElement& x) {
  check_top(alg, nabla);
  check_element(alg, alpha);
  Poly scale = alg.zero();
  for (std::size_t i = 0; i < alg.rank(); ++i) scale += alpha.coeffs[i] * nabla.gamma[i];
  return TopElement{anchor_apply(alg, alpha, x.coefficient) + x.coefficient * scale};
}

LElement torsion_apply(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla, const LElement& alpha,
                       const LElement& beta) {
  return left_connection_apply(alg, nabla, alpha, beta) - left_connection_apply(alg, nabla, beta, alpha) -
         bracket(alg, alpha, beta);
}

std::vector<std::vector<LElement>> torsion(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla) {
  check_left(alg, nabla);
  const std::size_t n = alg.rank();
  std::vector<std::vector<LElement>> t(n, std::vector<LElement>(n, LElement::zero(n, alg.nvars())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LElement& out = t[i][j];
      for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = nabla.gamma(i, j, k) - nabla.gamma(j, i, k);
      out -= alg.basis_bracket(i, j);
    }
  return t;
}

bool is_torsion_free(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla) {
  for (const auto& row : torsion(alg, nabla))
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<std::vector<Poly>> curvature_top(const LieRinehartAlgebra& alg, const TopConnection& nabla) {
  check_top(alg, nabla);
  const std::size_t n = alg.rank();
  std::vector<std::vector<Poly>> r(n, std::vector<Poly>(n, alg.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly v = derivation_apply(alg.anchor(i), nabla.gamma[j]) - derivation_apply(alg.anchor(j), nabla.gamma[i]);
      const LElement& c = alg.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) v -= c.coeffs[k] * nabla.gamma[k];
      r[i][j] = std::move(v);
    }
  return r;
}

bool is_flat(const LieRinehartAlgebra& alg, const TopConnection& nabla) {
  for (const auto& row : curvature_top(alg, nabla))
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

AltForm covariant_derivative(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f) {
  check_top(alg, nabla);
  const std::size_t n = alg.rank();
  const std::size_t m = alg.nvars();
  if (f.rank() != n || f.nvars() != m) throw std::invalid_argument("covariant_derivative: form does not match algebra");
  const std::size_t q = f.degree();
  AltForm out(q + 1, n, m);
  if (q + 1 > n) return out;
  const std::size_t p = n - q;  // f lives in Alt^{n-p}; arguments are xi_p..xi_n

  for (Blade t : blades_of_degree(n, q + 1)) {
    const auto idx = t.indices();
    Poly value(m);
    for (std::size_t l = 0; l < idx.size(); ++l) {
      // position j = p + l
      const TopElement inner{f.value(t.without(idx[l]))};
      Poly term = connection_apply_top(alg, nabla, LElement::basis(n, m, idx[l]), inner).coefficient;
      if ((p + l - 1) % 2 == 0) value += term;
      else value -= term;
    }
    for (std::size_t l = 0; l < idx.size(); ++l) {
      for (std::size_t l2 = l + 1; l2 < idx.size(); ++l2) {
        LElement br = alg.basis_bracket(idx[l], idx[l2]);
        if (br.is_zero()) continue;
        std::vector<LElement> args{br};
        for (std::size_t r = 0; r < idx.size(); ++r)
          if (r != l && r != l2) args.push_back(LElement::basis(n, m, idx[r]));
        Poly term = f.evaluate(args);
        // (-1)^{p+1} (-1)^{(p+l)+(p+l2)} = (-1)^{p+1+l+l2}
        if ((p + 1 + l + l2) % 2 == 0) value += term;
        else value -= term;
      }
    }
    out.set_value(t, value);
  }
  return out;
}

EndoOfL phi_map(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla, const LElement& alpha) {
  const std::size_t n = alg.rank();
  EndoOfL e{std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, alg.zero()))};
  for (std::size_t j = 0; j < n; ++j) {
    const LElement ej = LElement::basis(n, alg.nvars(), j);
    const LElement img = bracket(alg, alpha, ej) - left_connection_apply(alg, nabla, alpha, ej);
    for (std::size_t k = 0; k < n; ++k) e.matrix[k][j] = img.coeffs[k];
  }
  return e;
}

Poly trace_endo(const EndoOfL& e) {
  if (e.matrix.empty()) return Poly(0);
  Poly t(e.matrix[0][0].nvars());
  for (std::size_t i = 0; i < e.matrix.size(); ++i) t += e.matrix[i][i];
  return t;
}

TopConnection induced_top_connection(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla) {
  check_left(alg, nabla);
  TopConnection top = TopConnection::zero(alg);
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (std::size_t k = 0; k < alg.rank(); ++k) top.gamma[i] += nabla.gamma(i, k, k);
  return top;
}

AltForm generalized_lie_derivative(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f,
                                   const LElement& alpha) {
  const std::size_t n = alg.rank();
  if (f.degree() != n || f.rank() != n) throw std::invalid_argument("generalized Lie derivative needs a top-degree form");
  const Poly s = f.value(Blade::full(n));
  const TopElement unit{alg.one()};
  // f acts on Lambda^n L as multiplication by s.
  const Poly first = connection_apply_top(alg, nabla, alpha, TopElement{s}).coefficient;
  const Poly second = s * lie_derivative_top(alg, alpha, unit).coefficient;
  AltForm out(n, n, alg.nvars());
  out.set_value(Blade::full(n), first - second);
  return out;
}

AltForm dual_right_connection(const LieRinehartAlgebra& alg, const TopConnection& nabla, const AltForm& f,
                              const LElement& alpha) {
  return -generalized_lie_derivative(alg, nabla, f, alpha);
}

Poly divergence_rank_one(const RankOneEndomorphism& e, std::size_t nvars) {
  return e(Poly::constant(nvars, Rational(1)));
}

}  // namespace lrbv
