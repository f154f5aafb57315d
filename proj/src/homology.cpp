#include "lrbv/homology.hpp"

#include <sstream>

namespace lrbv {

std::size_t matrix_rank(const QMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  // Clear denominators row by row, then Bareiss elimination over Z.
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = row[j].get_num() * (l / row[j].get_den());
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

QMatrix matrix_product(const QMatrix& a, const QMatrix& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  QMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool matrix_is_zero(const QMatrix& m) {
  for (const auto& row : m)
    for (const auto& q : row)
      if (q != 0) return false;
  return true;
}

std::size_t ChainComplex::first_nonzero_square() const {
  for (std::size_t p = 2; p < boundaries.size(); ++p)
    if (!matrix_is_zero(matrix_product(boundaries[p - 1], boundaries[p], dims[p - 1]))) return p;
  return 0;
}

ChainComplex rinehart_complex(const LieRinehartAlgebra& alg, const GeneratorD& d) {
  if (alg.nvars() != 0)
    throw std::invalid_argument("homology needs a finite-dimensional complex (m = 0), got m = " +
                                std::to_string(alg.nvars()));
  const std::size_t n = alg.rank();
  ChainComplex c;
  std::vector<std::vector<Blade>> basis;
  for (std::size_t p = 0; p <= n; ++p) {
    basis.push_back(blades_of_degree(n, p));
    c.dims.push_back(basis.back().size());
  }
  c.boundaries.emplace_back();
  for (std::size_t p = 1; p <= n; ++p) {
    QMatrix mat(c.dims[p - 1], std::vector<Rational>(c.dims[p]));
    for (std::size_t j = 0; j < basis[p].size(); ++j) {
      const Multivector img = apply_generator(alg, d, Multivector::blade(basis[p][j], alg.one(), n));
      for (std::size_t i = 0; i < basis[p - 1].size(); ++i) mat[i][j] = *img.coefficient(basis[p - 1][i]).constant_value();
    }
    c.boundaries.push_back(std::move(mat));
  }
  if (std::size_t p = c.first_nonzero_square()) {
    // A basis blade is a complete witness here since D is linear over Q.
    for (Blade b : basis[p]) {
      const Multivector u = Multivector::blade(b, alg.one(), n);
      const Multivector dd = apply_generator(alg, d, apply_generator(alg, d, u));
      if (!dd.is_zero()) throw NonExactGenerator("u=" + u.to_string() + "; D(D(u))=" + dd.to_string());
    }
    throw NonExactGenerator("degree " + std::to_string(p));
  }
  return c;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  if (std::size_t p = c.first_nonzero_square()) {
    std::ostringstream os;
    os << "d^2 != 0 at degree " << p;
    throw std::invalid_argument(os.str());
  }
  const std::size_t top = c.dims.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t p = 1; p < top; ++p) ranks[p] = matrix_rank(c.boundaries[p]);
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p < top; ++p) betti.push_back(c.dims[p] - ranks[p] - ranks[p + 1]);
  return betti;
}

}  // namespace lrbv
