#include "lrbv/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrbv {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

Poly Poly::monomial(Exponents exps, const Rational& c) {
  Poly p(exps.size());
  p.add_term(exps, c);
  return p;
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && total_degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& top = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(top.begin(), top.end(), std::uint64_t{0}));
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::require_same_nvars(const Poly& other, const char* op) const {
  if (nvars_ != other.nvars_) {
    std::ostringstream os;
    os << "polynomial " << op << ": variable count mismatch (" << nvars_ << " vs "
       << other.nvars_ << ")";
    throw std::invalid_argument(os.str());
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_nvars(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_nvars(other, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_nvars(b, "mul");
  Poly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= nvars_) {
    std::ostringstream os;
    os << "partial derivative: variable index " << index + 1 << " out of range 1.." << nvars_;
    throw std::out_of_range(os.str());
  }
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    out.add_term(d, c * Rational(e[index]));
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest grlex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = true;
    for (auto x : e) unit_monomial = unit_monomial && x == 0;
    bool wrote = false;
    if (mag != 1 || unit_monomial) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_neg(const Poly& p) { return -p; }
Poly partial_derivative(const Poly& p, std::size_t index) { return p.derivative(index); }

Derivation Derivation::zero(std::size_t nvars) {
  return Derivation{std::vector<Poly>(nvars, Poly(nvars))};
}

bool Derivation::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (components[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << components[j].to_string() << ")*d/dx" << j + 1;
  }
  return first ? "0" : os.str();
}

Poly derivation_apply(const Derivation& d, const Poly& p) {
  if (d.nvars() != p.nvars())
    throw std::invalid_argument("derivation_apply: dimension mismatch");
  Poly out(p.nvars());
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    if (d.components[j].is_zero()) continue;
    out += d.components[j] * p.derivative(j);
  }
  return out;
}

Derivation derivation_commutator(const Derivation& d1, const Derivation& d2) {
  if (d1.nvars() != d2.nvars())
    throw std::invalid_argument("derivation_commutator: dimension mismatch");
  const std::size_t m = d1.nvars();
  Derivation out = Derivation::zero(m);
  // [d1,d2] has components d1(d2_k) - d2(d1_k).
  for (std::size_t k = 0; k < m; ++k)
    out.components[k] = derivation_apply(d1, d2.components[k]) - derivation_apply(d2, d1.components[k]);
  return out;
}

}  // namespace lrbv
