#include "lrbv/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lrbv {

Blade Blade::from_indices(const std::vector<std::size_t>& idx) {
  std::uint32_t m = 0;
  for (auto i : idx) {
    if (i >= kMaxRank) throw std::out_of_range("blade index exceeds maximum rank");
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (m & bit) throw std::invalid_argument("blade indices must be distinct");
    m |= bit;
  }
  return Blade(m);
}

std::vector<std::size_t> Blade::indices() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

bool operator<(Blade a, Blade b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const std::uint32_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return false;
  // The smallest index in exactly one of the two tuples decides.
  return (a.mask_ & (diff & (~diff + 1))) != 0;
}

std::string Blade::to_string() const {
  std::ostringstream os;
  os << "e{";
  bool first = true;
  for (auto i : indices()) {
    os << (first ? "" : ",") << i + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

int wedge_sign(Blade s, Blade t) {
  if (s.mask() & t.mask()) return 0;
  std::size_t inversions = 0;
  for (std::uint32_t m = t.mask(); m; m &= m - 1) {
    const auto i = std::countr_zero(m);
    const std::uint32_t above = s.mask() & ~((std::uint32_t{2} << i) - 1);
    inversions += static_cast<std::size_t>(std::popcount(above));
  }
  return (inversions & 1u) ? -1 : 1;
}

std::vector<Blade> blades_of_degree(std::size_t n, std::size_t degree) {
  if (n > kMaxRank) throw std::out_of_range("rank exceeds maximum");
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == degree) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

Multivector Multivector::scalar(const Poly& a, std::size_t rank) {
  return blade(Blade(), a, rank);
}

Multivector Multivector::blade(Blade b, const Poly& coeff, std::size_t rank) {
  Multivector u(rank, coeff.nvars());
  u.add_term(b, coeff);
  return u;
}

Multivector Multivector::from_element(const LElement& x) {
  const std::size_t m = x.coeffs.empty() ? 0 : x.coeffs.front().nvars();
  Multivector u(x.rank(), m);
  for (std::size_t i = 0; i < x.rank(); ++i) u.add_term(Blade::single(i), x.coeffs[i]);
  return u;
}

Poly Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Poly(nvars_) : it->second;
}

std::optional<std::size_t> Multivector::homogeneous_degree(std::size_t fallback) const {
  if (terms_.empty()) return fallback;
  const std::size_t d = terms_.begin()->first.degree();
  for (const auto& [b, c] : terms_)
    if (b.degree() != d) return std::nullopt;
  return d;
}

void Multivector::add_term(Blade b, const Poly& coeff) {
  if (coeff.nvars() != nvars_) throw std::invalid_argument("multivector: variable count mismatch");
  if ((b.mask() >> rank_) != 0) throw std::out_of_range("multivector: blade index exceeds rank");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Multivector::check_compatible(const Multivector& o) const {
  if (o.rank_ != rank_) throw std::invalid_argument("multivector: rank mismatch");
  if (o.nvars_ != nvars_) throw std::invalid_argument("multivector: variable count mismatch");
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_compatible(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_compatible(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

Multivector operator*(const Poly& a, const Multivector& u) {
  Multivector out(u.rank_, u.nvars_);
  if (a.is_zero()) return out;
  for (const auto& [b, c] : u.terms_) out.add_term(b, a * c);
  return out;
}

Multivector operator*(const Rational& c, Multivector u) {
  if (sgn(c) == 0) return Multivector(u.rank_, u.nvars_);
  for (auto& [b, v] : u.terms_) v *= c;
  return u;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << b.to_string();
  }
  return os.str();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("wedge: rank mismatch");
  if (u.nvars() != v.nvars()) throw std::invalid_argument("wedge: variable count mismatch");
  Multivector out(u.rank(), u.nvars());
  for (const auto& [s, a] : u.terms()) {
    for (const auto& [t, b] : v.terms()) {
      const int sign = wedge_sign(s, t);
      if (sign == 0) continue;
      Poly c = a * b;
      out.add_term(Blade(s.mask() | t.mask()), sign > 0 ? c : -c);
    }
  }
  return out;
}

TopElement top_pairing(const Multivector& u, const Multivector& v) {
  const std::size_t n = u.rank();
  auto du = u.homogeneous_degree(0);
  auto dv = v.homogeneous_degree(n - du.value_or(0));
  if (!du || !dv || *du + *dv != n)
    throw std::invalid_argument("top_pairing: arguments must be homogeneous of complementary degree");
  return TopElement{wedge(u, v).coefficient(Blade::full(n))};
}

Poly AltForm::value(Blade tuple) const {
  auto it = values_.find(tuple);
  return it == values_.end() ? Poly(nvars_) : it->second;
}

void AltForm::set_value(Blade tuple, const Poly& v) {
  if (tuple.degree() != degree_) throw std::invalid_argument("alt form: tuple has wrong length");
  if ((tuple.mask() >> rank_) != 0) throw std::out_of_range("alt form: index exceeds rank");
  if (v.nvars() != nvars_) throw std::invalid_argument("alt form: variable count mismatch");
  if (v.is_zero()) values_.erase(tuple);
  else values_[tuple] = v;
}

Poly AltForm::evaluate(const std::vector<LElement>& args) const {
  if (args.size() != degree_) throw std::invalid_argument("alt form: wrong number of arguments");
  for (const auto& a : args)
    if (a.rank() != rank_) throw std::invalid_argument("alt form: argument rank mismatch");
  Poly out(nvars_);
  if (values_.empty()) return out;
  if (degree_ == 0) return value(Blade());

  // Expand over one basis index per argument, tracking the permutation sign.
  struct Frame {
    std::uint32_t mask;
    bool negative;
    Poly coeff;
  };
  std::vector<Frame> frontier{{0u, false, Poly::constant(nvars_, Rational(1))}};
  for (const auto& arg : args) {
    std::vector<Frame> next;
    for (const auto& fr : frontier) {
      for (std::size_t i = 0; i < rank_; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if ((fr.mask & bit) || arg.coeffs[i].is_zero()) continue;
        const std::uint32_t above = fr.mask & ~((bit << 1) - 1);
        const bool flip = std::popcount(above) & 1;
        next.push_back({fr.mask | bit, fr.negative != flip, fr.coeff * arg.coeffs[i]});
      }
    }
    frontier = std::move(next);
  }
  for (const auto& fr : frontier) {
    auto it = values_.find(Blade(fr.mask));
    if (it == values_.end()) continue;
    Poly term = fr.coeff * it->second;
    if (fr.negative) out -= term;
    else out += term;
  }
  return out;
}

Poly AltForm::evaluate(const Multivector& u) const {
  if (u.rank() != rank_) throw std::invalid_argument("alt form: multivector rank mismatch");
  Poly out(nvars_);
  for (const auto& [b, c] : u.terms()) {
    if (b.degree() != degree_) throw std::invalid_argument("alt form: multivector has wrong degree");
    auto it = values_.find(b);
    if (it != values_.end()) out += c * it->second;
  }
  return out;
}

AltForm& AltForm::operator+=(const AltForm& o) {
  if (o.degree_ != degree_ || o.rank_ != rank_ || o.nvars_ != nvars_)
    throw std::invalid_argument("alt form: incompatible sum");
  for (const auto& [b, v] : o.values_) set_value(b, value(b) + v);
  return *this;
}

AltForm AltForm::operator-() const {
  AltForm out = *this;
  for (auto& [b, v] : out.values_) v = -v;
  return out;
}

AltForm operator*(const Poly& a, const AltForm& f) {
  AltForm out(f.degree_, f.rank_, f.nvars_);
  for (const auto& [b, v] : f.values_) out.set_value(b, a * v);
  return out;
}

std::string AltForm::to_string() const {
  std::ostringstream os;
  os << "form[deg " << degree_ << "]{";
  bool first = true;
  for (const auto& [b, v] : values_) {
    if (!first) os << ", ";
    first = false;
    os << b.to_string() << " -> " << v.to_string();
  }
  os << "}";
  return os.str();
}

AltForm phi_iso(const Multivector& alpha, std::size_t degree) {
  const std::size_t n = alpha.rank();
  if (degree > n) throw std::invalid_argument("phi_iso: degree exceeds rank");
  AltForm f(n - degree, n, alpha.nvars());
  for (const auto& [s, a] : alpha.terms()) {
    if (s.degree() != degree) throw std::invalid_argument("phi_iso: inhomogeneous input");
    const Blade t = s.complement(n);
    f.set_value(t, wedge_sign(s, t) > 0 ? a : -a);
  }
  return f;
}

AltForm phi_iso(const Multivector& alpha) {
  auto d = alpha.homogeneous_degree(0);
  if (!d) throw std::invalid_argument("phi_iso: inhomogeneous input");
  return phi_iso(alpha, *d);
}

Multivector phi_inverse(const AltForm& f) {
  const std::size_t n = f.rank();
  Multivector alpha(n, f.nvars());
  if (f.degree() > n) return alpha;
  for (const auto& [t, v] : f.values()) {
    const Blade s = t.complement(n);
    alpha.add_term(s, wedge_sign(s, t) > 0 ? v : -v);
  }
  return alpha;
}

}  // namespace lrbv
