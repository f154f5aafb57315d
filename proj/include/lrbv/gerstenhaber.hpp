#pragma once

#include "lrbv/exterior.hpp"
#include "lrbv/lie_rinehart.hpp"
#include "lrbv/random.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrbv {

// Right (A,L)-connection on A, stored by r_i = 1 o e_i. For general
// arguments a o (sum b_i e_i) = sum_i (a b_i r_i - rho(e_i)(a b_i)).
struct RightConnectionOnA {
  std::vector<Poly> r;

  static RightConnectionOnA zero(const LieRinehartAlgebra& alg);
  friend bool operator==(const RightConnectionOnA&, const RightConnectionOnA&) = default;
  std::string to_string() const;
};

// a o alpha for a right connection.
Poly right_action(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc, const Poly& a,
                  const LElement& alpha);

// Generator of the Gerstenhaber bracket. Every generator comes from a right
// connection, so the connection is the stored datum.
struct GeneratorD {
  RightConnectionOnA underlying;
  friend bool operator==(const GeneratorD&, const GeneratorD&) = default;
};

// Outcome of a randomized identity check. `witness` is set on failure.
struct CheckResult {
  bool ok = true;
  std::string witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

// Gerstenhaber bracket on Lambda_A L (degree -1, biderivation):
//   [alpha, a] = alpha(a), [a, b] = 0, [alpha, beta] = Lie bracket,
//   [u, v ^ w] = [u,v] ^ w + (-1)^{(|u|-1)|v|} v ^ [u,w],
//   [u, v] = -(-1)^{(|u|-1)(|v|-1)} [v, u].
Multivector gerstenhaber_bracket(const LieRinehartAlgebra& alg, const Multivector& u,
                                 const Multivector& v);

// The operator on theta_1 ^ ... ^ theta_p given by
//   sum_i (-1)^{i-1} (1 o theta_i) theta_1 ^ .. ^theta_i^ .. ^ theta_p
//   + sum_{j<k} (-1)^{j+k} [theta_j, theta_k] ^ theta_1 ^ .. ^theta_j^ .. ^theta_k^ .. ^ theta_p.
Multivector generator_on_factors(const LieRinehartAlgebra& alg, const RightConnectionOnA& rc,
                                 const std::vector<LElement>& thetas);

// D on a general multivector: each term a e_S is fed to generator_on_factors
// as (a e_{s1}, e_{s2}, ..., e_{sp}). Degree 0 maps to 0.
Multivector apply_generator(const LieRinehartAlgebra& alg, const GeneratorD& d, const Multivector& u);

// Checks [u,v] = (-1)^{|u|} (D(u^v) - D(u)^v - (-1)^{|u|} u^D(v)) on every
// pair of basis blades with random coefficients, `trials` rounds.
CheckResult is_generator(const LieRinehartAlgebra& alg, const GeneratorD& d, int trials,
                         std::uint64_t seed, SampleBounds bounds = {});

// Same identity for an arbitrary operator (used to show non-generators fail).
using MultivectorOperator = std::function<Multivector(const Multivector&)>;
CheckResult is_generator(const LieRinehartAlgebra& alg, const MultivectorOperator& op, int trials,
                         std::uint64_t seed, SampleBounds bounds = {});

struct SquareReport {
  std::vector<std::pair<Multivector, Multivector>> table;  // (u, D(D(u)))
  bool is_exact = true;
  std::string witness;
};

// D o D on every basis blade with random coefficients.
SquareReport generator_square(const LieRinehartAlgebra& alg, const GeneratorD& d, int trials,
                              std::uint64_t seed, SampleBounds bounds = {});

}  // namespace lrbv
