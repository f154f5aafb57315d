#include "lrbv/correspondences.hpp"

#include <sstream>
#include <stdexcept>

namespace lrbv {

namespace {

Poly lambda_trace(const LieRinehartAlgebra& alg, std::size_t i) {
  return lie_derivative_top(alg, LElement::basis(alg.rank(), alg.nvars(), i), TopElement{alg.one()}).coefficient;
}

}  // namespace

RightConnectionOnA right_from_generator(const LieRinehartAlgebra& alg, const GeneratorD& d) {
  RightConnectionOnA rc = RightConnectionOnA::zero(alg);
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    Multivector e = Multivector::blade(Blade::single(i), alg.one(), alg.rank());
    rc.r[i] = apply_generator(alg, d, e).coefficient(Blade());
  }
  return rc;
}

TopConnection top_from_right(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc) {
  if (rc.r.size() != alg.rank()) throw std::invalid_argument("right connection: wrong length");
  TopConnection top = TopConnection::zero(alg);
  for (std::size_t i = 0; i < alg.rank(); ++i) top.gamma[i] = lambda_trace(alg, i) - rc.r[i];
  return top;
}

RightConnectionOnA right_from_top(const LieRinehartAlgebra& alg, const TopConnection& nabla) {
  if (nabla.gamma.size() != alg.rank()) throw std::invalid_argument("top connection: wrong length");
  RightConnectionOnA rc = RightConnectionOnA::zero(alg);
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    const LElement e = LElement::basis(alg.rank(), alg.nvars(), i);
    const TopElement unit{alg.one()};
    rc.r[i] = lie_derivative_top(alg, e, unit).coefficient - connection_apply_top(alg, nabla, e, unit).coefficient;
  }
  return rc;
}

GeneratorD generator_from_top(const LieRinehartAlgebra& alg, const TopConnection& nabla) {
  return GeneratorD{right_from_top(alg, nabla)};
}

TopConnection top_from_generator(const LieRinehartAlgebra& alg, const GeneratorD& d) {
  const std::size_t n = alg.rank();
  TopConnection top = TopConnection::zero(alg);
  if (n == 0) return top;
  const Multivector vol = Multivector::blade(Blade::full(n), alg.one(), n);
  const AltForm f = phi_iso(apply_generator(alg, d, vol), n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    Poly v = f.value(Blade::single(i));
    top.gamma[i] = (n % 2 == 0) ? v : -v;
  }
  return top;
}

CheckResult check_theorem_1_8(const LieRinehartAlgebra& alg, const GeneratorD& d, const TopConnection& nabla,
                              int trials, std::uint64_t seed, SampleBounds bounds) {
  RandomSource rng(seed, bounds);
  const std::size_t n = alg.rank();
  for (int trial = 0; trial < trials; ++trial) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (Blade s : blades_of_degree(n, p)) {
        const Multivector alpha = Multivector::blade(s, rng.nonzero_poly(alg.nvars()), n);
        const Multivector d_alpha = apply_generator(alg, d, alpha);
        const AltForm rhs = -covariant_derivative(alg, nabla, phi_iso(alpha, p));
        // In degree 0, D(alpha) = 0 and its image is the zero form of degree n+1.
        const AltForm lhs = p == 0 ? AltForm(n + 1, n, alg.nvars()) : phi_iso(d_alpha, p - 1);
        if (p == 0 && !d_alpha.is_zero()) {
          return CheckResult::fail("alpha=" + alpha.to_string() + "; D(alpha)=" + d_alpha.to_string() +
                                   " is nonzero in degree 0");
        }
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "degree=" << p << "; alpha=" << alpha.to_string() << "; phi(D alpha)=" << lhs.to_string()
             << "; -d(phi alpha)=" << rhs.to_string();
          return CheckResult::fail(os.str());
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_remark_1_9(const LieRinehartAlgebra& alg, const GeneratorD& d, const TopConnection& nabla,
                             int trials, std::uint64_t seed, SampleBounds bounds) {
  RandomSource rng(seed, bounds);
  const std::size_t n = alg.rank();
  const Blade full = Blade::full(n);
  for (int trial = 0; trial < trials; ++trial) {
    // p = 0 would pair with beta of degree n+1, which is zero.
    for (std::size_t p = 1; p <= n; ++p) {
      for (Blade s : blades_of_degree(n, p)) {
        for (Blade t : blades_of_degree(n, n - p + 1)) {
          const Multivector alpha = Multivector::blade(s, rng.nonzero_poly(alg.nvars()), n);
          const Multivector beta = Multivector::blade(t, rng.nonzero_poly(alg.nvars()), n);
          const Poly lhs = covariant_derivative(alg, nabla, phi_iso(alpha, p)).evaluate(beta);
          Poly rhs = wedge(alpha, apply_generator(alg, d, beta)).coefficient(full) +
                     gerstenhaber_bracket(alg, alpha, beta).coefficient(full);
          if (p % 2 == 1) rhs = -rhs;
          if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "alpha=" << alpha.to_string() << "; beta=" << beta.to_string() << "; lhs=" << lhs.to_string()
               << "; rhs=" << rhs.to_string();
            return CheckResult::fail(os.str());
          }
        }
      }
    }
  }
  return CheckResult::pass();
}

GeneratorD koszul_generator(const LieRinehartAlgebra& alg, const LeftConnectionOnL& nabla) {
  RightConnectionOnA rc = RightConnectionOnA::zero(alg);
  for (std::size_t i = 0; i < alg.rank(); ++i)
    rc.r[i] = trace_endo(phi_map(alg, nabla, LElement::basis(alg.rank(), alg.nvars(), i)));
  return GeneratorD{rc};
}

LeftConnectionOnL half_bracket_connection(const LieRinehartAlgebra& alg) {
  const std::size_t n = alg.rank();
  LeftConnectionOnL base(n, alg.nvars());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) base.gamma(i, j, k) = alg.structure(i, j, k) * half;
  return base;
}

TorsionFreeLift torsionfree_lift(const LieRinehartAlgebra& alg, const TopConnection& target) {
  return torsionfree_lift(alg, target, half_bracket_connection(alg));
}

TorsionFreeLift torsionfree_lift(const LieRinehartAlgebra& alg, const TopConnection& target,
                                 const LeftConnectionOnL& base) {
  const std::size_t n = alg.rank();
  if (n == 0) throw std::invalid_argument("torsionfree_lift: rank must be positive");
  if (target.gamma.size() != n) throw std::invalid_argument("torsionfree_lift: target has wrong length");
  if (!is_torsion_free(alg, base)) throw std::invalid_argument("torsionfree_lift: base connection has torsion");

  const TopConnection induced = induced_top_connection(alg, base);
  std::vector<Poly> diff(n, alg.zero());
  for (std::size_t i = 0; i < n; ++i) diff[i] = target.gamma[i] - induced.gamma[i];

  const Rational scale(1, static_cast<long>(n + 1));
  TorsionFreeLift out{base, {}, base};
  for (std::size_t i = 0; i < n; ++i) {
    EndoOfL e{std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, alg.zero()))};
    // Phi(e_i) e_j = (phi_i e_j + phi_j e_i) / (n+1)
    for (std::size_t j = 0; j < n; ++j) {
      e.matrix[j][j] += diff[i] * scale;
      e.matrix[i][j] += diff[j] * scale;
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.connection.gamma(i, j, k) += e.matrix[k][j];
    out.phi.push_back(std::move(e));
  }
  return out;
}

}  // namespace lrbv
