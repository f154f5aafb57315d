#pragma once

#include "lrbv/gerstenhaber.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lrbv {

// Dense matrix over Q, row-major.
using QMatrix = std::vector<std::vector<Rational>>;

std::size_t matrix_rank(const QMatrix& m);
QMatrix matrix_product(const QMatrix& a, const QMatrix& b, std::size_t inner);
bool matrix_is_zero(const QMatrix& m);

// boundaries[p] is d_p : Lambda^p -> Lambda^{p-1} as a dims[p-1] x dims[p]
// matrix in the blade basis; boundaries[0] is empty.
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<QMatrix> boundaries;

  // Index p of the first composite d_{p-1} d_p that is nonzero, or 0.
  std::size_t first_nonzero_square() const;
};

class NonExactGenerator : public std::runtime_error {
 public:
  explicit NonExactGenerator(const std::string& witness)
      : std::runtime_error("generator does not square to zero: " + witness), witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// Matrices of D on each Lambda^p L. Throws std::invalid_argument when m > 0
// and NonExactGenerator when D^2 != 0.
ChainComplex rinehart_complex(const LieRinehartAlgebra& alg, const GeneratorD& d);

// dim ker d_p - rank d_{p+1}. Throws std::invalid_argument when d^2 != 0.
std::vector<std::size_t> homology_dims(const ChainComplex& c);

}  // namespace lrbv
