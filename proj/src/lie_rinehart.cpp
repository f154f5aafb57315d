#include "lrbv/lie_rinehart.hpp"

#include <sstream>
#include <stdexcept>

namespace lrbv {

LElement LElement::zero(std::size_t rank, std::size_t nvars) {
  return LElement{std::vector<Poly>(rank, Poly(nvars))};
}

LElement LElement::basis(std::size_t rank, std::size_t nvars, std::size_t i) {
  LElement e = zero(rank, nvars);
  e.coeffs.at(i) = Poly::constant(nvars, Rational(1));
  return e;
}

bool LElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

LElement& LElement::operator+=(const LElement& o) {
  if (o.rank() != rank()) throw std::invalid_argument("LElement: rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

LElement& LElement::operator-=(const LElement& o) {
  if (o.rank() != rank()) throw std::invalid_argument("LElement: rank mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

LElement LElement::operator-() const {
  LElement out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

LElement operator*(const Poly& a, const LElement& x) {
  LElement out = x;
  for (auto& c : out.coeffs) c = a * c;
  return out;
}

std::string LElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[i].to_string() << ")*e" << i + 1;
  }
  return first ? "0" : os.str();
}

LieRinehartAlgebra::LieRinehartAlgebra(std::string name, std::size_t nvars, std::size_t rank,
                                       std::vector<Derivation> anchor,
                                       std::vector<LElement> upper_brackets)
    : name_(std::move(name)), nvars_(nvars), rank_(rank), anchor_(std::move(anchor)) {
  if (anchor_.size() != rank_) throw std::invalid_argument("anchor must have one row per basis element");
  for (const auto& d : anchor_) {
    if (d.nvars() != nvars_) throw std::invalid_argument("anchor row has wrong variable count");
    for (const auto& c : d.components)
      if (c.nvars() != nvars_) throw std::invalid_argument("anchor entry has wrong variable count");
  }
  if (upper_brackets.size() != rank_ * (rank_ - (rank_ > 0 ? 1 : 0)) / 2)
    throw std::invalid_argument("expected one structure vector per pair i<j");

  table_.assign(rank_ * rank_, LElement::zero(rank_, nvars_));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = i + 1; j < rank_; ++j, ++idx) {
      const LElement& c = upper_brackets[idx];
      if (c.rank() != rank_) throw std::invalid_argument("structure vector has wrong rank");
      for (const auto& p : c.coeffs)
        if (p.nvars() != nvars_) throw std::invalid_argument("structure function has wrong variable count");
      table_[i * rank_ + j] = c;
      table_[j * rank_ + i] = -c;
    }
  }

  ad_trace_.assign(rank_, Poly(nvars_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < rank_; ++k) ad_trace_[i] += basis_bracket(i, k).coeffs[k];
}

LieRinehartAlgebra LieRinehartAlgebra::abelian(std::string name, std::size_t nvars, std::size_t rank) {
  std::vector<Derivation> anchor(rank, Derivation::zero(nvars));
  std::vector<LElement> upper(rank * (rank > 0 ? rank - 1 : 0) / 2, LElement::zero(rank, nvars));
  return LieRinehartAlgebra(std::move(name), nvars, rank, std::move(anchor), std::move(upper));
}

namespace {

void check_element(const LieRinehartAlgebra& alg, const LElement& x, const char* op) {
  if (x.rank() != alg.rank()) {
    std::ostringstream os;
    os << op << ": element has rank " << x.rank() << ", algebra has rank " << alg.rank();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Derivation anchor_of(const LieRinehartAlgebra& alg, const LElement& alpha) {
  check_element(alg, alpha, "anchor_of");
  Derivation d = Derivation::zero(alg.nvars());
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < alg.nvars(); ++j)
      d.components[j] += alpha.coeffs[i] * alg.anchor(i).components[j];
  }
  return d;
}

Poly anchor_apply(const LieRinehartAlgebra& alg, const LElement& alpha, const Poly& a) {
  check_element(alg, alpha, "anchor_apply");
  if (a.nvars() != alg.nvars()) throw std::invalid_argument("anchor_apply: dimension mismatch");
  Poly out(alg.nvars());
  for (std::size_t i = 0; i < alg.rank(); ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    out += alpha.coeffs[i] * derivation_apply(alg.anchor(i), a);
  }
  return out;
}

LElement bracket(const LieRinehartAlgebra& alg, const LElement& alpha, const LElement& beta) {
  check_element(alg, alpha, "bracket");
  check_element(alg, beta, "bracket");
  const std::size_t n = alg.rank();
  LElement out = LElement::zero(n, alg.nvars());
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (beta.coeffs[j].is_zero() || i == j) continue;
      out += (alpha.coeffs[i] * beta.coeffs[j]) * alg.basis_bracket(i, j);
    }
  }
  for (std::size_t j = 0; j < n; ++j) out.coeffs[j] += anchor_apply(alg, alpha, beta.coeffs[j]);
  for (std::size_t i = 0; i < n; ++i) out.coeffs[i] -= anchor_apply(alg, beta, alpha.coeffs[i]);
  return out;
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << (kind == Kind::Jacobi ? "jacobi" : "anchor-homomorphism") << " violated at (";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
  os << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::vector<AxiomViolation> verify_axioms(const LieRinehartAlgebra& alg) {
  std::vector<AxiomViolation> out;
  const std::size_t n = alg.rank();
  const std::size_t m = alg.nvars();
  auto e = [&](std::size_t i) { return LElement::basis(n, m, i); };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Derivation lhs = derivation_commutator(alg.anchor(i), alg.anchor(j));
      Derivation rhs = anchor_of(alg, alg.basis_bracket(i, j));
      if (!(lhs == rhs)) {
        out.push_back({AxiomViolation::Kind::AnchorHomomorphism, {i + 1, j + 1},
                       "[rho(e_i),rho(e_j)] = " + lhs.to_string() + " but rho([e_i,e_j]) = " +
                           rhs.to_string()});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        LElement cyc = bracket(alg, e(i), alg.basis_bracket(j, k)) +
                       bracket(alg, e(j), alg.basis_bracket(k, i)) +
                       bracket(alg, e(k), alg.basis_bracket(i, j));
        if (!cyc.is_zero()) {
          out.push_back({AxiomViolation::Kind::Jacobi, {i + 1, j + 1, k + 1},
                         "cyclic sum = " + cyc.to_string()});
        }
      }
    }
  }
  return out;
}

LieRinehartAlgebra build_poisson_cotangent(const std::vector<std::vector<Poly>>& pi, std::string name) {
  const std::size_t m = pi.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (pi[i].size() != m) throw std::invalid_argument("bivector must be a square matrix");
    for (std::size_t j = 0; j < m; ++j)
      if (pi[i][j].nvars() != m) throw std::invalid_argument("bivector entry has wrong variable count");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (!(pi[i][j] == -pi[j][i])) {
        std::ostringstream os;
        os << "bivector is not antisymmetric at (" << i + 1 << "," << j + 1 << ")";
        throw std::invalid_argument(os.str());
      }

  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < m; ++i) anchor.push_back(Derivation{pi[i]});
  std::vector<LElement> upper;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      LElement c = LElement::zero(m, m);
      for (std::size_t k = 0; k < m; ++k) c.coeffs[k] = pi[i][j].derivative(k);
      upper.push_back(std::move(c));
    }
  }
  return LieRinehartAlgebra(std::move(name), m, m, std::move(anchor), std::move(upper));
}

}  // namespace lrbv
