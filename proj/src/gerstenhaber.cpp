#include "lrbv/gerstenhaber.hpp"

#include <sstream>
#include <stdexcept>

namespace lrbv {

RightConnectionOnA RightConnectionOnA::zero(const LieRinehartAlgebra& alg) {
  return RightConnectionOnA{std::vector<Poly>(alg.rank(), alg.zero())};
}

std::string RightConnectionOnA::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? ", " : "") << r[i].to_string();
  os << "]";
  return os.str();
}

namespace {

void check_right(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc) {
  if (rc.r.size() != alg.rank()) throw std::invalid_argument("right connection: wrong length");
  for (const auto& p : rc.r)
    if (p.nvars() != alg.nvars()) throw std::invalid_argument("right connection: variable count mismatch");
}

void check_multivector(const LieRinehartAlgebra& alg, const Multivector& u) {
  if (u.rank() != alg.rank() || u.nvars() != alg.nvars())
    throw std::invalid_argument("multivector does not belong to this algebra");
}

Multivector basis_blade(const LieRinehartAlgebra& alg, Blade b) {
  return Multivector::blade(b, alg.one(), alg.rank());
}

// Wedge of the factors whose positions are not in `skip`.
Multivector wedge_except(const LieRinehartAlgebra& alg, const std::vector<Multivector>& factors,
                         std::uint32_t skip) {
  Multivector acc = Multivector::scalar(alg.one(), alg.rank());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((skip >> i) & 1u) continue;
    acc = wedge(acc, factors[i]);
  }
  return acc;
}

// [e_t, a e_S]: the anchor hits a, the bracket hits each basis factor.
Multivector bracket_basis_with_term(const LieRinehartAlgebra& alg, std::size_t t, Blade s, const Poly& a) {
  Multivector out(alg.rank(), alg.nvars());
  out.add_term(s, derivation_apply(alg.anchor(t), a));
  const auto idx = s.indices();
  for (std::size_t l = 0; l < idx.size(); ++l) {
    const LElement& br = alg.basis_bracket(t, idx[l]);
    if (br.is_zero()) continue;
    Blade before(0), after(0);
    for (std::size_t q = 0; q < l; ++q) before = Blade(before.mask() | Blade::single(idx[q]).mask());
    for (std::size_t q = l + 1; q < idx.size(); ++q) after = Blade(after.mask() | Blade::single(idx[q]).mask());
    Multivector mid = wedge(basis_blade(alg, before), wedge(Multivector::from_element(br), basis_blade(alg, after)));
    out += a * mid;
  }
  return out;
}

// [b, e_S] for b of degree 0: -sum_l (-1)^{l-1} rho(e_{s_l})(b) e_{S - s_l}.
Multivector bracket_scalar_with_blade(const LieRinehartAlgebra& alg, const Poly& b, Blade s) {
  Multivector out(alg.rank(), alg.nvars());
  const auto idx = s.indices();
  for (std::size_t l = 0; l < idx.size(); ++l) {
    Poly d = derivation_apply(alg.anchor(idx[l]), b);
    out.add_term(s.without(idx[l]), (l % 2 == 0) ? -d : d);
  }
  return out;
}

// [a e_S, b e_T], expanding the right argument into its factors.
Multivector bracket_terms(const LieRinehartAlgebra& alg, Blade s, const Poly& a, Blade t, const Poly& b) {
  const std::size_t p = s.degree();
  Multivector out(alg.rank(), alg.nvars());

  // (-1)^p [b, a e_S] ^ e_T
  Multivector first = a * bracket_scalar_with_blade(alg, b, s);
  if (!first.is_zero()) {
    Multivector w = wedge(first, basis_blade(alg, t));
    if (p % 2 == 0) out += w;
    else out -= w;
  }

  // b sum_l (-1)^{(p-1)(l-1)} e_{t<l} ^ (-[e_{t_l}, a e_S]) ^ e_{t>l}
  const auto idx = t.indices();
  for (std::size_t l = 0; l < idx.size(); ++l) {
    Multivector inner = bracket_basis_with_term(alg, idx[l], s, a);
    if (inner.is_zero()) continue;
    Blade before(0), after(0);
    for (std::size_t q = 0; q < l; ++q) before = Blade(before.mask() | Blade::single(idx[q]).mask());
    for (std::size_t q = l + 1; q < idx.size(); ++q) after = Blade(after.mask() | Blade::single(idx[q]).mask());
    Multivector w = wedge(basis_blade(alg, before), wedge(inner, basis_blade(alg, after)));
    // l is 0-based here, so the sign is -(-1)^{(p-1) l}.
    const bool odd = ((p + 1) * l) % 2 == 1;
    if (odd) out += b * w;
    else out -= b * w;
  }
  return out;
}

}  // namespace

Poly right_action(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc, const Poly& a,
                  const LElement& alpha) {
  check_right(alg, rc);
  if (alpha.rank() != alg.rank()) throw std::invalid_argument("right_action: rank mismatch");
  Poly out(alg.nvars());
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    Poly ab = a * alpha.coeffs[i];
    out += ab * rc.r[i];
    out -= derivation_apply(alg.anchor(i), ab);
  }
  return out;
}

Multivector gerstenhaber_bracket(const LieRinehartAlgebra& alg, const Multivector& u, const Multivector& v) {
  check_multivector(alg, u);
  check_multivector(alg, v);
  Multivector out(alg.rank(), alg.nvars());
  for (const auto& [s, a] : u.terms())
    for (const auto& [t, b] : v.terms()) out += bracket_terms(alg, s, a, t, b);
  return out;
}

Multivector generator_on_factors(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc,
                                 const std::vector<LElement>& thetas) {
  check_right(alg, rc);
  const std::size_t p = thetas.size();
  Multivector out(alg.rank(), alg.nvars());
  if (p == 0) return out;
  std::vector<Multivector> factors;
  factors.reserve(p);
  for (const auto& th : thetas) factors.push_back(Multivector::from_element(th));

  for (std::size_t i = 0; i < p; ++i) {
    Poly c = right_action(alg, rc, alg.one(), thetas[i]);
    if (c.is_zero()) continue;
    Multivector rest = c * wedge_except(alg, factors, std::uint32_t{1} << i);
    if (i % 2 == 0) out += rest;
    else out -= rest;
  }
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j + 1; k < p; ++k) {
      LElement br = bracket(alg, thetas[j], thetas[k]);
      if (br.is_zero()) continue;
      Multivector w = wedge(Multivector::from_element(br),
                            wedge_except(alg, factors, (std::uint32_t{1} << j) | (std::uint32_t{1} << k)));
      // (j+1)+(k+1) has the parity of j+k
      if ((j + k) % 2 == 0) out += w;
      else out -= w;
    }
  }
  return out;
}

Multivector apply_generator(const LieRinehartAlgebra& alg, const GeneratorD& d, const Multivector& u) {
  check_multivector(alg, u);
  Multivector out(alg.rank(), alg.nvars());
  for (const auto& [s, a] : u.terms()) {
    const auto idx = s.indices();
    if (idx.empty()) continue;
    std::vector<LElement> thetas;
    thetas.reserve(idx.size());
    for (std::size_t l = 0; l < idx.size(); ++l) {
      LElement e = LElement::basis(alg.rank(), alg.nvars(), idx[l]);
      thetas.push_back(l == 0 ? a * e : e);
    }
    out += generator_on_factors(alg, d.underlying, thetas);
  }
  return out;
}

namespace {

std::vector<Blade> all_blades(std::size_t n) {
  std::vector<Blade> out;
  for (std::size_t p = 0; p <= n; ++p) {
    auto b = blades_of_degree(n, p);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace

CheckResult is_generator(const LieRinehartAlgebra& alg, const MultivectorOperator& op, int trials,
                         std::uint64_t seed, SampleBounds bounds) {
  RandomSource rng(seed, bounds);
  const auto blades = all_blades(alg.rank());
  for (int trial = 0; trial < trials; ++trial) {
    for (Blade s : blades) {
      for (Blade t : blades) {
        const Multivector u = Multivector::blade(s, rng.nonzero_poly(alg.nvars()), alg.rank());
        const Multivector v = Multivector::blade(t, rng.nonzero_poly(alg.nvars()), alg.rank());
        const std::size_t p = s.degree();
        const Multivector lhs = gerstenhaber_bracket(alg, u, v);
        Multivector defect = op(wedge(u, v)) - wedge(op(u), v);
        const Multivector u_dv = wedge(u, op(v));
        if (p % 2 == 0) defect -= u_dv;
        else defect += u_dv;
        const Multivector rhs = (p % 2 == 0) ? defect : -defect;
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "u=" << u.to_string() << "; v=" << v.to_string() << "; [u,v]=" << lhs.to_string()
             << "; generator side=" << rhs.to_string();
          return CheckResult::fail(os.str());
        }
      }
    }
  }
  return CheckResult::pass();
}

CheckResult is_generator(const LieRinehartAlgebra& alg, const GeneratorD& d, int trials, std::uint64_t seed,
                         SampleBounds bounds) {
  check_right(alg, d.underlying);
  return is_generator(
      alg, [&](const Multivector& u) { return apply_generator(alg, d, u); }, trials, seed, bounds);
}

SquareReport generator_square(const LieRinehartAlgebra& alg, const GeneratorD& d, int trials,
                              std::uint64_t seed, SampleBounds bounds) {
  check_right(alg, d.underlying);
  RandomSource rng(seed, bounds);
  SquareReport rep;
  const auto blades = all_blades(alg.rank());
  for (int trial = 0; trial < trials; ++trial) {
    for (Blade s : blades) {
      Multivector u = Multivector::blade(s, rng.nonzero_poly(alg.nvars()), alg.rank());
      Multivector dd = apply_generator(alg, d, apply_generator(alg, d, u));
      if (!dd.is_zero() && rep.is_exact) {
        rep.is_exact = false;
        rep.witness = "u=" + u.to_string() + "; D(D(u))=" + dd.to_string();
      }
      rep.table.emplace_back(std::move(u), std::move(dd));
    }
  }
  return rep;
}

}  // namespace lrbv
